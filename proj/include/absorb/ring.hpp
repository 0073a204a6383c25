#pragma once

/**
 * @file ring.hpp
 * @brief Exact finite commutative rings with unity, given by operation tables.
 *
 * A FiniteRing stores dense addition/multiplication tables over element
 * indices 0..size-1. Everything downstream (ideals, multiplicative sets,
 * radicals, the predicate zoo) is an exhaustive scan over those tables, so
 * a single generic loop per predicate covers hand-built rings and compiled
 * constructions alike.
 */

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "absorb/common.hpp"

namespace absorb {

struct FiniteRing;
using Ring = std::shared_ptr<const FiniteRing>;

struct FiniteRing {
    int size = 0;
    std::vector<Elem> add;  // row-major size*size
    std::vector<Elem> mul;
    Elem zero_elem = 0;
    Elem one_elem = 0;
    std::string label;

    // derived, filled by make_ring
    std::vector<Elem> neg;       // additive inverse per element
    ElemSet unit_set;            // ascending
    std::vector<char> unit_bit;  // size flags

    Elem add_of(Elem a, Elem b) const { return add[static_cast<std::size_t>(a) * size + b]; }
    Elem mul_of(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * size + b]; }
    Elem neg_of(Elem a) const { return neg[static_cast<std::size_t>(a)]; }
    Elem sub_of(Elem a, Elem b) const { return add_of(a, neg_of(b)); }
    bool is_unit(Elem a) const { return unit_bit[static_cast<std::size_t>(a)] != 0; }
    bool is_zero_ring() const { return size == 1; }

    ElemSet nonunits() const {
        ElemSet out;
        for (Elem a = 0; a < size; ++a)
            if (!is_unit(a)) out.push_back(a);
        return out;
    }

    // lazily built ideal lattice (safe for concurrent read after init)
    mutable std::once_flag lattice_once;
    mutable std::vector<ElemSet> lattice;

    FiniteRing() = default;
    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;
};

inline bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    return a && b && a->size == b->size && a->zero_elem == b->zero_elem &&
           a->one_elem == b->one_elem && a->add == b->add && a->mul == b->mul;
}

/// Finalize derived data (negation, units). Cheap O(size^2) scans.
inline Ring make_ring(int size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                      std::string label) {
    if (size <= 0) throw input_error("make_ring: size must be positive");
    auto r = std::make_shared<FiniteRing>();
    r->size = size;
    r->add = std::move(add);
    r->mul = std::move(mul);
    r->zero_elem = zero;
    r->one_elem = one;
    r->label = std::move(label);
    if (r->add.size() != static_cast<std::size_t>(size) * size ||
        r->mul.size() != static_cast<std::size_t>(size) * size)
        throw input_error("make_ring: table dimensions do not match size");
    r->neg.assign(static_cast<std::size_t>(size), -1);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (r->add_of(a, b) == zero) r->neg[static_cast<std::size_t>(a)] = b;
    for (Elem a = 0; a < size; ++a)
        if (r->neg[static_cast<std::size_t>(a)] < 0)
            throw input_error("make_ring: element " + std::to_string(a) +
                              " has no additive inverse");
    r->unit_bit.assign(static_cast<std::size_t>(size), 0);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (r->mul_of(a, b) == one) {
                r->unit_bit[static_cast<std::size_t>(a)] = 1;
                break;
            }
    for (Elem a = 0; a < size; ++a)
        if (r->unit_bit[static_cast<std::size_t>(a)]) r->unit_set.push_back(a);
    return r;
}

/// Z_n with element i at index i.
inline Ring build_zn(int n) {
    if (n <= 0) throw input_error("build_zn: n must be >= 1");
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
        }
    return make_ring(n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                     "Z" + std::to_string(n));
}

/// Exhaustive O(size^3) check of every ring axiom; nullopt when all pass.
inline std::optional<std::string> check_ring_axioms(const Ring& R) {
    const FiniteRing& r = *R;
    const int n = r.size;
    auto bad = [&](const std::string& what) { return std::optional<std::string>(r.label + ": " + what); };
    if (n > 1 && r.zero_elem == r.one_elem) return bad("one equals zero in nontrivial ring");
    for (Elem a = 0; a < n; ++a) {
        if (r.add_of(a, r.zero_elem) != a) return bad("zero is not additive identity");
        if (r.mul_of(a, r.one_elem) != a) return bad("one is not multiplicative identity");
        if (r.add_of(a, r.neg_of(a)) != r.zero_elem) return bad("negation table broken");
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (r.add_of(a, b) != r.add_of(b, a)) return bad("addition not commutative");
            if (r.mul_of(a, b) != r.mul_of(b, a)) return bad("multiplication not commutative");
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (r.add_of(r.add_of(a, b), c) != r.add_of(a, r.add_of(b, c)))
                    return bad("addition not associative");
                if (r.mul_of(r.mul_of(a, b), c) != r.mul_of(a, r.mul_of(b, c)))
                    return bad("multiplication not associative");
                if (r.mul_of(a, r.add_of(b, c)) != r.add_of(r.mul_of(a, b), r.mul_of(a, c)))
                    return bad("distributivity fails");
            }
    return std::nullopt;
}

/// U(R) = { r : exists x with rx = 1 }, ascending.
inline const ElemSet& units(const Ring& R) { return R->unit_set; }

// ---------------------------------------------------------------------------
// Ideals and multiplicative sets
// ---------------------------------------------------------------------------

struct Ideal {
    Ring ring;
    ElemSet members;

    bool contains(Elem e) const { return set_contains(members, e); }
    bool is_proper() const { return members.size() < static_cast<std::size_t>(ring->size); }
    bool is_zero() const { return members.size() == 1 && members[0] == ring->zero_elem; }
};

struct MultiplicativeSet {
    Ring ring;
    ElemSet members;  // nonempty; closed under multiplication; 1 not required

    bool contains(Elem e) const { return set_contains(members, e); }
};

/// A subset is an ideal iff it contains 0 and is closed under + and r*.
/// Returns a violation description, or nullopt when the set is an ideal.
inline std::optional<std::string> ideal_violation(const Ring& R, const ElemSet& members) {
    if (!set_contains(members, R->zero_elem)) return std::string("0 is missing");
    for (Elem a : members)
        for (Elem b : members)
            if (!set_contains(members, R->add_of(a, b)))
                return "not closed under addition: " + std::to_string(a) + "+" +
                       std::to_string(b) + "=" + std::to_string(R->add_of(a, b));
    for (Elem r = 0; r < R->size; ++r)
        for (Elem a : members)
            if (!set_contains(members, R->mul_of(r, a)))
                return "not absorbing: " + std::to_string(r) + "*" + std::to_string(a) + "=" +
                       std::to_string(R->mul_of(r, a));
    return std::nullopt;
}

inline Ideal make_ideal(Ring R, ElemSet members) {
    members = sorted_unique(std::move(members));
    if (auto why = ideal_violation(R, members))
        throw input_error("make_ideal: " + *why);
    return Ideal{std::move(R), std::move(members)};
}

inline std::optional<std::string> multset_violation(const Ring& R, const ElemSet& members) {
    if (members.empty()) return std::string("multiplicative set must be nonempty");
    for (Elem a : members)
        for (Elem b : members)
            if (!set_contains(members, R->mul_of(a, b)))
                return "not multiplicatively closed: " + std::to_string(a) + "*" +
                       std::to_string(b) + "=" + std::to_string(R->mul_of(a, b));
    return std::nullopt;
}

inline MultiplicativeSet make_multset(Ring R, ElemSet members) {
    members = sorted_unique(std::move(members));
    if (auto why = multset_violation(R, members))
        throw input_error("make_multset: " + *why);
    return MultiplicativeSet{std::move(R), std::move(members)};
}

/// Multiplicative closure of a set of generators.
inline MultiplicativeSet multset_generate(const Ring& R, const ElemSet& gens) {
    if (gens.empty()) throw input_error("multset_generate: need at least one generator");
    ElemSet out = sorted_unique(gens);
    bool grew = true;
    while (grew) {
        grew = false;
        ElemSet snapshot = out;
        for (Elem a : snapshot)
            for (Elem b : snapshot) {
                Elem p = R->mul_of(a, b);
                if (!set_contains(out, p)) {
                    set_insert(out, p);
                    grew = true;
                }
            }
    }
    return MultiplicativeSet{R, std::move(out)};
}

/// Additive closure of a scalar-closed seed set; in a finite group this is
/// already a subgroup.
inline ElemSet additive_closure(const Ring& R, ElemSet seed) {
    set_insert(seed, R->zero_elem);
    std::vector<char> in(static_cast<std::size_t>(R->size), 0);
    for (Elem e : seed) in[static_cast<std::size_t>(e)] = 1;
    std::vector<Elem> work(seed.begin(), seed.end());
    ElemSet all(seed);
    while (!work.empty()) {
        Elem e = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < all.size(); ++i) {
            Elem s = R->add_of(e, all[i]);
            if (!in[static_cast<std::size_t>(s)]) {
                in[static_cast<std::size_t>(s)] = 1;
                all.push_back(s);
                work.push_back(s);
            }
        }
    }
    return sorted_unique(std::move(all));
}

/// Smallest ideal containing gens: all R-multiples, then additive closure.
inline Ideal ideal_generate(const Ring& R, const ElemSet& gens) {
    ElemSet seed;
    for (Elem g : gens) {
        if (g < 0 || g >= R->size) throw input_error("ideal_generate: generator out of range");
        for (Elem r = 0; r < R->size; ++r) seed.push_back(R->mul_of(r, g));
    }
    return Ideal{R, additive_closure(R, sorted_unique(std::move(seed)))};
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring, J.ring)) throw input_error("ideal_product: ring mismatch");
    const Ring& R = I.ring;
    ElemSet seed;
    for (Elem i : I.members)
        for (Elem j : J.members) seed.push_back(R->mul_of(i, j));
    return Ideal{R, additive_closure(R, sorted_unique(std::move(seed)))};
}

/// (I : s) = { r : s*r in I }.
inline Ideal ideal_colon_element(const Ideal& I, Elem s) {
    ElemSet out;
    for (Elem r = 0; r < I.ring->size; ++r)
        if (I.contains(I.ring->mul_of(s, r))) out.push_back(r);
    return Ideal{I.ring, std::move(out)};
}

/// sqrt(I) = { a : a^k in I for some 1 <= k <= size }. The exponent bound
/// suffices because power sequences in a finite ring cycle within size steps.
inline Ideal radical(const Ideal& I) {
    const Ring& R = I.ring;
    ElemSet out;
    for (Elem a = 0; a < R->size; ++a) {
        Elem p = a;
        for (int k = 1; k <= R->size; ++k) {
            if (I.contains(p)) {
                out.push_back(a);
                break;
            }
            p = R->mul_of(p, a);
        }
    }
    return Ideal{R, std::move(out)};
}

/// Saturation S* = { r : r/1 is a unit of S^-1 R }
///              = { r : exists x in R, s,u in S with u(rx - s) = 0 }.
inline MultiplicativeSet saturate(const Ring& R, const MultiplicativeSet& S) {
    ElemSet out;
    for (Elem r = 0; r < R->size; ++r) {
        bool in = false;
        for (Elem x = 0; x < R->size && !in; ++x) {
            Elem rx = R->mul_of(r, x);
            for (Elem s : S.members) {
                Elem d = R->sub_of(rx, s);
                for (Elem u : S.members)
                    if (R->mul_of(u, d) == R->zero_elem) {
                        in = true;
                        break;
                    }
                if (in) break;
            }
        }
        if (in) out.push_back(r);
    }
    return MultiplicativeSet{R, std::move(out)};
}

/// Smallest-index s in S divisible (in R) by every member of S. The product
/// of all members is always such an s, so the scan cannot fail.
inline Elem max_multiple_witness(const MultiplicativeSet& S) {
    const Ring& R = S.ring;
    for (Elem s : S.members) {
        bool ok = true;
        for (Elem t : S.members) {
            bool div = false;
            for (Elem x = 0; x < R->size; ++x)
                if (R->mul_of(t, x) == s) {
                    div = true;
                    break;
                }
            if (!div) {
                ok = false;
                break;
            }
        }
        if (ok) return s;
    }
    throw std::logic_error("max_multiple_witness: no witness found (set not closed?)");
}

/// Quasilocal iff the non-units are closed under addition.
inline bool is_quasilocal(const Ring& R) {
    ElemSet nu = R->nonunits();
    for (Elem a : nu)
        for (Elem b : nu)
            if (R->is_unit(R->add_of(a, b))) return false;
    return true;
}

/// Z_I(R) = { x : xy in I for some y in R \ I }.
inline ElemSet zero_divisors_mod(const Ideal& I) {
    const Ring& R = I.ring;
    if (!I.is_proper()) throw input_error("zero_divisors_mod: ideal must be proper");
    ElemSet out;
    for (Elem x = 0; x < R->size; ++x)
        for (Elem y = 0; y < R->size; ++y)
            if (!I.contains(y) && I.contains(R->mul_of(x, y))) {
                out.push_back(x);
                break;
            }
    return out;
}

// ---------------------------------------------------------------------------
// Ideal lattice
// ---------------------------------------------------------------------------

/// All ideals of R: join-closure of the principal ideals. Standalone (no
/// caching) so that refutation re-checks can bypass memoized lattices.
inline std::vector<ElemSet> compute_ideal_lattice(const FiniteRing& r) {
    // principal ideal Rg is already closed under + since (x+y)g = xg+yg
    std::map<ElemSet, bool> seen;
    std::vector<ElemSet> principals;
    for (Elem g = 0; g < r.size; ++g) {
        ElemSet p;
        for (Elem x = 0; x < r.size; ++x) p.push_back(r.mul_of(x, g));
        p = sorted_unique(std::move(p));
        if (seen.emplace(p, true).second) principals.push_back(p);
    }
    std::vector<ElemSet> work(principals);
    std::vector<ElemSet> all(principals);
    while (!work.empty()) {
        ElemSet cur = std::move(work.back());
        work.pop_back();
        for (const ElemSet& p : principals) {
            ElemSet join;  // I + J = { i + j }
            for (Elem i : cur)
                for (Elem j : p) join.push_back(r.add_of(i, j));
            join = sorted_unique(std::move(join));
            if (seen.emplace(join, true).second) {
                all.push_back(join);
                work.push_back(join);
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return all;
}

inline const std::vector<ElemSet>& ideal_lattice(const Ring& R) {
    std::call_once(R->lattice_once, [&] { R->lattice = compute_ideal_lattice(*R); });
    return R->lattice;
}

inline std::vector<Ideal> enumerate_ideals(const Ring& R) {
    std::vector<Ideal> out;
    for (const ElemSet& m : ideal_lattice(R)) out.push_back(Ideal{R, m});
    return out;
}

inline std::vector<Ideal> proper_ideals(const Ring& R) {
    std::vector<Ideal> out;
    for (const ElemSet& m : ideal_lattice(R))
        if (m.size() < static_cast<std::size_t>(R->size)) out.push_back(Ideal{R, m});
    return out;
}

// ---------------------------------------------------------------------------
// Ring homomorphisms
// ---------------------------------------------------------------------------

struct RingHom {
    Ring source;
    Ring target;
    std::vector<Elem> map;  // length source->size

    Elem of(Elem a) const { return map[static_cast<std::size_t>(a)]; }
};

inline std::optional<std::string> ring_hom_violation(const RingHom& f) {
    const FiniteRing& A = *f.source;
    const FiniteRing& B = *f.target;
    if (f.map.size() != static_cast<std::size_t>(A.size)) return std::string("map length mismatch");
    for (Elem x : f.map)
        if (x < 0 || x >= B.size) return std::string("map image out of range");
    if (f.of(A.one_elem) != B.one_elem) return std::string("map(1) != 1");
    for (Elem a = 0; a < A.size; ++a)
        for (Elem b = 0; b < A.size; ++b) {
            if (f.of(A.add_of(a, b)) != B.add_of(f.of(a), f.of(b)))
                return "not additive at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            if (f.of(A.mul_of(a, b)) != B.mul_of(f.of(a), f.of(b)))
                return "not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    return std::nullopt;
}

inline RingHom make_ring_hom(Ring source, Ring target, std::vector<Elem> map) {
    RingHom f{std::move(source), std::move(target), std::move(map)};
    if (auto why = ring_hom_violation(f)) throw input_error("make_ring_hom: " + *why);
    return f;
}

inline RingHom identity_hom(const Ring& R) {
    std::vector<Elem> m(static_cast<std::size_t>(R->size));
    for (Elem a = 0; a < R->size; ++a) m[static_cast<std::size_t>(a)] = a;
    return RingHom{R, R, std::move(m)};
}

// ---------------------------------------------------------------------------
// Predicate checks
// ---------------------------------------------------------------------------

enum class IdealPredicate {
    prime,
    primary,
    s_prime,
    s_primary,
    one_abs_primary,
    s_one_abs_primary,
};

inline const char* to_string(IdealPredicate p) {
    switch (p) {
        case IdealPredicate::prime: return "prime";
        case IdealPredicate::primary: return "primary";
        case IdealPredicate::s_prime: return "s_prime";
        case IdealPredicate::s_primary: return "s_primary";
        case IdealPredicate::one_abs_primary: return "one_abs_primary";
        case IdealPredicate::s_one_abs_primary: return "s_one_abs_primary";
    }
    return "?";
}

inline bool ideal_predicate_uses_s(IdealPredicate p) {
    return p == IdealPredicate::s_prime || p == IdealPredicate::s_primary ||
           p == IdealPredicate::s_one_abs_primary;
}

/**
 * Outcome of a predicate check. Fixed-s semantics throughout: an S-predicate
 * holds only when a single s in S certifies the definition over every tuple;
 * the smallest such s is reported. On failure the counterexample stores the
 * violating tuple found for the smallest s.
 */
struct PredicateReport {
    std::string predicate;
    bool applicable = false;
    bool holds = false;
    std::optional<Elem> witness_s;
    std::vector<Elem> counterexample;
    std::string notes;

    bool ok() const { return applicable && holds; }
};

/// Precomputed scan context shared by the per-witness violation search.
struct IdealPredCtx {
    Ideal rad;
    ElemSet nonunits;
};

inline IdealPredCtx make_ideal_pred_ctx(const Ring& R, const Ideal& I) {
    return IdealPredCtx{radical(I), R->nonunits()};
}

/// First violating tuple under witness s, empty when s certifies everything.
/// For the non-S predicates pass any s; it is ignored.
inline std::vector<Elem> ideal_predicate_violation(const Ring& R, const Ideal& I,
                                                   const IdealPredCtx& ctx, IdealPredicate pred,
                                                   Elem s) {
    const Ideal& rad = ctx.rad;
    const ElemSet& nonunits = ctx.nonunits;
    switch (pred) {
        case IdealPredicate::prime:
            for (Elem a = 0; a < R->size; ++a)
                for (Elem b = 0; b < R->size; ++b)
                    if (I.contains(R->mul_of(a, b)) && !I.contains(a) && !I.contains(b))
                        return {a, b};
            return {};
        case IdealPredicate::primary:
            for (Elem a = 0; a < R->size; ++a)
                for (Elem b = 0; b < R->size; ++b)
                    if (I.contains(R->mul_of(a, b)) && !I.contains(a) && !rad.contains(b))
                        return {a, b};
            return {};
        case IdealPredicate::s_prime:
            for (Elem a = 0; a < R->size; ++a)
                for (Elem b = 0; b < R->size; ++b)
                    if (I.contains(R->mul_of(a, b)) && !I.contains(R->mul_of(s, a)) &&
                        !I.contains(R->mul_of(s, b)))
                        return {a, b};
            return {};
        case IdealPredicate::s_primary:
            // ab in I => sa in sqrt(I) or sb in I  (the M = R reading)
            for (Elem a = 0; a < R->size; ++a)
                for (Elem b = 0; b < R->size; ++b)
                    if (I.contains(R->mul_of(a, b)) && !rad.contains(R->mul_of(s, a)) &&
                        !I.contains(R->mul_of(s, b)))
                        return {a, b};
            return {};
        case IdealPredicate::one_abs_primary:
            for (std::size_t ia = 0; ia < nonunits.size(); ++ia)
                for (std::size_t ib = ia; ib < nonunits.size(); ++ib) {
                    Elem ab = R->mul_of(nonunits[ia], nonunits[ib]);
                    if (I.contains(ab)) continue;
                    for (Elem c : nonunits)
                        if (I.contains(R->mul_of(ab, c)) && !rad.contains(c))
                            return {nonunits[ia], nonunits[ib], c};
                }
            return {};
        case IdealPredicate::s_one_abs_primary:
            for (std::size_t ia = 0; ia < nonunits.size(); ++ia)
                for (std::size_t ib = ia; ib < nonunits.size(); ++ib) {
                    Elem ab = R->mul_of(nonunits[ia], nonunits[ib]);
                    if (I.contains(R->mul_of(s, ab))) continue;
                    for (Elem c : nonunits)
                        if (I.contains(R->mul_of(ab, c)) && !rad.contains(R->mul_of(s, c)))
                            return {nonunits[ia], nonunits[ib], c};
                }
            return {};
    }
    return {};
}

inline bool ideal_predicate_certified_by(const Ring& R, const Ideal& I, IdealPredicate pred,
                                         Elem s) {
    auto ctx = make_ideal_pred_ctx(R, I);
    return ideal_predicate_violation(R, I, ctx, pred, s).empty();
}

/**
 * check_ideal_predicate: exhaustive fixed-s scan.
 *
 * Quantifier domains follow the definitions: prime/primary/s_prime/s_primary
 * range over all pairs; the 1-absorbing variants range over non-unit triples.
 * Gate: I cap S = empty for S-predicates (violations classify as
 * applicable=false rather than erroring, so corpus sweeps can count them).
 */
inline PredicateReport check_ideal_predicate(const Ring& R, const Ideal& I,
                                             const std::optional<MultiplicativeSet>& S,
                                             IdealPredicate pred) {
    if (!same_ring(R, I.ring)) throw input_error("check_ideal_predicate: ring mismatch");
    PredicateReport rep;
    rep.predicate = to_string(pred);
    if (R->is_zero_ring()) {
        rep.notes = "zero ring: every element is a unit, predicates are vacuous";
        return rep;
    }
    if (!I.is_proper()) throw input_error("check_ideal_predicate: ideal must be proper");
    const bool uses_s = ideal_predicate_uses_s(pred);
    if (uses_s && !S) throw input_error("check_ideal_predicate: S required for S-predicate");
    if (uses_s) {
        ElemSet overlap = set_intersection(I.members, S->members);
        if (!overlap.empty()) {
            rep.notes = "gate I cap S violated at s=" + std::to_string(overlap.front());
            return rep;
        }
    }
    rep.applicable = true;

    const IdealPredCtx ctx = make_ideal_pred_ctx(R, I);
    if (!uses_s) {
        auto bad = ideal_predicate_violation(R, I, ctx, pred, R->one_elem);
        rep.holds = bad.empty();
        if (!rep.holds) rep.counterexample = std::move(bad);
        return rep;
    }
    std::vector<Elem> first_bad;
    bool have_bad = false;
    for (Elem s : S->members) {
        auto bad = ideal_predicate_violation(R, I, ctx, pred, s);
        if (bad.empty()) {
            rep.holds = true;
            rep.witness_s = s;
            return rep;
        }
        if (!have_bad) {
            first_bad = std::move(bad);
            have_bad = true;
        }
    }
    rep.holds = false;
    rep.counterexample = std::move(first_bad);
    return rep;
}

}  // namespace absorb
