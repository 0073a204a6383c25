#pragma once

/**
 * @file module.hpp
 * @brief Finite unital modules over finite rings: submodule lattices, colon
 *        and residual operators, M-radical, quotients, homomorphisms and the
 *        submodule-level predicate zoo.
 *
 * The submodule lattice and M-radicals of a module are memoized on the
 * module object; initialization is guarded so concurrent readers are safe
 * after the first computation. Standalone compute_* functions bypass the
 * caches (used by refutation re-checks).
 */

#include "absorb/ring.hpp"

namespace absorb {

struct FiniteModule;
using Module = std::shared_ptr<const FiniteModule>;

struct FiniteModule {
    Ring ring;
    int size = 0;
    std::vector<Elem> add;  // size*size row-major
    std::vector<Elem> act;  // ring->size * size row-major, scalar action r.m
    Elem zero_elem = 0;
    std::string label;

    std::vector<Elem> neg;

    Elem add_of(Elem a, Elem b) const { return add[static_cast<std::size_t>(a) * size + b]; }
    Elem act_of(Elem r, Elem m) const { return act[static_cast<std::size_t>(r) * size + m]; }
    Elem neg_of(Elem a) const { return neg[static_cast<std::size_t>(a)]; }
    Elem sub_of(Elem a, Elem b) const { return add_of(a, neg_of(b)); }
    bool is_zero_module() const { return size == 1; }

    // caches
    mutable std::once_flag lattice_once;
    mutable std::vector<ElemSet> lattice;
    mutable std::vector<char> lattice_prime;  // parallel to lattice
    mutable std::mutex memo_mutex;
    mutable std::map<ElemSet, ElemSet> mrad_memo;

    FiniteModule() = default;
    FiniteModule(const FiniteModule&) = delete;
    FiniteModule& operator=(const FiniteModule&) = delete;
};

inline bool same_module(const Module& a, const Module& b) {
    if (a == b) return true;
    return a && b && same_ring(a->ring, b->ring) && a->size == b->size &&
           a->zero_elem == b->zero_elem && a->add == b->add && a->act == b->act;
}

inline Module make_module(Ring R, int size, std::vector<Elem> add, std::vector<Elem> act,
                          Elem zero, std::string label) {
    if (size <= 0) throw input_error("make_module: size must be positive");
    auto m = std::make_shared<FiniteModule>();
    m->ring = std::move(R);
    m->size = size;
    m->add = std::move(add);
    m->act = std::move(act);
    m->zero_elem = zero;
    m->label = std::move(label);
    if (m->add.size() != static_cast<std::size_t>(size) * size ||
        m->act.size() != static_cast<std::size_t>(m->ring->size) * size)
        throw input_error("make_module: table dimensions do not match sizes");
    m->neg.assign(static_cast<std::size_t>(size), -1);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (m->add_of(a, b) == zero) m->neg[static_cast<std::size_t>(a)] = b;
    for (Elem a = 0; a < size; ++a)
        if (m->neg[static_cast<std::size_t>(a)] < 0)
            throw input_error("make_module: element " + std::to_string(a) +
                              " has no additive inverse");
    return m;
}

/// R viewed as a module over itself (the action is multiplication).
inline Module ring_as_module(const Ring& R) {
    return make_module(R, R->size, R->add, R->mul, R->zero_elem, R->label);
}

/// Exhaustive module axiom check; nullopt when all pass.
inline std::optional<std::string> check_module_axioms(const Module& M) {
    const FiniteModule& m = *M;
    const FiniteRing& r = *m.ring;
    auto bad = [&](const std::string& what) {
        return std::optional<std::string>(m.label + ": " + what);
    };
    for (Elem a = 0; a < m.size; ++a) {
        if (m.add_of(a, m.zero_elem) != a) return bad("zero is not additive identity");
        if (m.act_of(r.one_elem, a) != a) return bad("1.m != m (module not unital)");
    }
    for (Elem a = 0; a < m.size; ++a)
        for (Elem b = 0; b < m.size; ++b)
            if (m.add_of(a, b) != m.add_of(b, a)) return bad("addition not commutative");
    for (Elem a = 0; a < m.size; ++a)
        for (Elem b = 0; b < m.size; ++b)
            for (Elem c = 0; c < m.size; ++c)
                if (m.add_of(m.add_of(a, b), c) != m.add_of(a, m.add_of(b, c)))
                    return bad("addition not associative");
    for (Elem x = 0; x < r.size; ++x)
        for (Elem a = 0; a < m.size; ++a)
            for (Elem b = 0; b < m.size; ++b)
                if (m.act_of(x, m.add_of(a, b)) != m.add_of(m.act_of(x, a), m.act_of(x, b)))
                    return bad("r(m+m') fails");
    for (Elem x = 0; x < r.size; ++x)
        for (Elem y = 0; y < r.size; ++y)
            for (Elem a = 0; a < m.size; ++a) {
                if (m.act_of(r.add_of(x, y), a) != m.add_of(m.act_of(x, a), m.act_of(y, a)))
                    return bad("(r+r')m fails");
                if (m.act_of(r.mul_of(x, y), a) != m.act_of(x, m.act_of(y, a)))
                    return bad("(rr')m fails");
            }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

struct Submodule {
    Module mod;
    ElemSet members;

    bool contains(Elem e) const { return set_contains(members, e); }
    bool is_proper() const { return members.size() < static_cast<std::size_t>(mod->size); }
    bool is_zero() const { return members.size() == 1 && members[0] == mod->zero_elem; }
};

inline std::optional<std::string> submodule_violation(const Module& M, const ElemSet& members) {
    if (!set_contains(members, M->zero_elem)) return std::string("0 is missing");
    for (Elem a : members)
        for (Elem b : members)
            if (!set_contains(members, M->add_of(a, b)))
                return "not closed under addition: " + std::to_string(a) + "+" +
                       std::to_string(b) + "=" + std::to_string(M->add_of(a, b));
    for (Elem r = 0; r < M->ring->size; ++r)
        for (Elem a : members)
            if (!set_contains(members, M->act_of(r, a)))
                return "not closed under the action: " + std::to_string(r) + "." +
                       std::to_string(a) + "=" + std::to_string(M->act_of(r, a));
    return std::nullopt;
}

inline Submodule make_submodule(Module M, ElemSet members) {
    members = sorted_unique(std::move(members));
    if (auto why = submodule_violation(M, members))
        throw input_error("make_submodule: " + *why);
    return Submodule{std::move(M), std::move(members)};
}

inline ElemSet module_additive_closure(const FiniteModule& m, ElemSet seed) {
    set_insert(seed, m.zero_elem);
    std::vector<char> in(static_cast<std::size_t>(m.size), 0);
    for (Elem e : seed) in[static_cast<std::size_t>(e)] = 1;
    std::vector<Elem> work(seed.begin(), seed.end());
    ElemSet all(seed);
    while (!work.empty()) {
        Elem e = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < all.size(); ++i) {
            Elem s = m.add_of(e, all[i]);
            if (!in[static_cast<std::size_t>(s)]) {
                in[static_cast<std::size_t>(s)] = 1;
                all.push_back(s);
                work.push_back(s);
            }
        }
    }
    return sorted_unique(std::move(all));
}

/// Smallest submodule containing gens.
inline Submodule submodule_generate(const Module& M, const ElemSet& gens) {
    ElemSet seed;
    for (Elem g : gens) {
        if (g < 0 || g >= M->size) throw input_error("submodule_generate: element out of range");
        for (Elem r = 0; r < M->ring->size; ++r) seed.push_back(M->act_of(r, g));
    }
    return Submodule{M, module_additive_closure(*M, sorted_unique(std::move(seed)))};
}

/// I.M for an ideal I: the submodule generated by { i.m }.
inline Submodule ideal_action(const Ideal& I, const Module& M) {
    ElemSet seed;
    for (Elem i : I.members)
        for (Elem m = 0; m < M->size; ++m) seed.push_back(M->act_of(i, m));
    return Submodule{M, module_additive_closure(*M, sorted_unique(std::move(seed)))};
}

// ---------------------------------------------------------------------------
// Colon operators
// ---------------------------------------------------------------------------

/// (N :_R L) = { r : r.L subseteq N } for a set L of module elements.
inline Ideal colon_ring(const Submodule& N, const ElemSet& L) {
    const Module& M = N.mod;
    ElemSet out;
    for (Elem r = 0; r < M->ring->size; ++r) {
        bool ok = true;
        for (Elem l : L)
            if (!N.contains(M->act_of(r, l))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(r);
    }
    return Ideal{M->ring, std::move(out)};
}

inline Ideal colon_ring(const Submodule& N, const Submodule& L) {
    if (!same_module(N.mod, L.mod)) throw input_error("colon_ring: module mismatch");
    return colon_ring(N, L.members);
}

/// (N :_R M), the presentation ideal of N.
inline Ideal colon_ring_full(const Submodule& N) {
    return colon_ring(N, full_set(N.mod->size));
}

/// (N :_M I) = { m : I.m subseteq N }.
inline Submodule colon_module(const Submodule& N, const ElemSet& ideal_members) {
    const Module& M = N.mod;
    ElemSet out;
    for (Elem m = 0; m < M->size; ++m) {
        bool ok = true;
        for (Elem i : ideal_members)
            if (!N.contains(M->act_of(i, m))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return Submodule{M, std::move(out)};
}

inline Submodule colon_module(const Submodule& N, const Ideal& I) {
    if (!same_ring(N.mod->ring, I.ring)) throw input_error("colon_module: ring mismatch");
    return colon_module(N, I.members);
}

/// (N :_M r) = { m : r.m in N }.
inline Submodule colon_module_element(const Submodule& N, Elem r) {
    return colon_module(N, ElemSet{r});
}

inline Ideal annihilator(const Module& M) {
    return colon_ring(Submodule{M, {M->zero_elem}}, full_set(M->size));
}

// ---------------------------------------------------------------------------
// Submodule lattice, prime submodules, M-radical
// ---------------------------------------------------------------------------

/// All submodules: join-closure of the cyclic submodules Rm. Sorted by
/// (cardinality, lexicographic). Cache-free.
inline std::vector<ElemSet> compute_submodule_lattice(const FiniteModule& m) {
    std::map<ElemSet, bool> seen;
    std::vector<ElemSet> cyclics;
    for (Elem g = 0; g < m.size; ++g) {
        ElemSet c;
        for (Elem r = 0; r < m.ring->size; ++r) c.push_back(m.act_of(r, g));
        c = sorted_unique(std::move(c));
        if (seen.emplace(c, true).second) cyclics.push_back(c);
    }
    std::vector<ElemSet> work(cyclics);
    std::vector<ElemSet> all(cyclics);
    while (!work.empty()) {
        ElemSet cur = std::move(work.back());
        work.pop_back();
        for (const ElemSet& c : cyclics) {
            ElemSet join;
            for (Elem a : cur)
                for (Elem b : c) join.push_back(m.add_of(a, b));
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

/// Prime: proper N with rm in N => m in N or r in (N:M). Cache-free form.
inline bool compute_is_prime_submodule(const FiniteModule& m, const ElemSet& members) {
    if (members.size() == static_cast<std::size_t>(m.size)) return false;
    ElemSet colon;  // (N:M), inlined so no Module handle is needed
    for (Elem r = 0; r < m.ring->size; ++r) {
        bool ok = true;
        for (Elem x = 0; x < m.size; ++x)
            if (!set_contains(members, m.act_of(r, x))) {
                ok = false;
                break;
            }
        if (ok) colon.push_back(r);
    }
    for (Elem r = 0; r < m.ring->size; ++r) {
        if (set_contains(colon, r)) continue;
        for (Elem x = 0; x < m.size; ++x)
            if (set_contains(members, m.act_of(r, x)) && !set_contains(members, x)) return false;
    }
    return true;
}

inline void ensure_lattice(const Module& M) {
    std::call_once(M->lattice_once, [&] {
        M->lattice = compute_submodule_lattice(*M);
        M->lattice_prime.resize(M->lattice.size());
        for (std::size_t i = 0; i < M->lattice.size(); ++i)
            M->lattice_prime[i] = compute_is_prime_submodule(*M, M->lattice[i]) ? 1 : 0;
    });
}

inline std::vector<Submodule> enumerate_submodules(const Module& M) {
    ensure_lattice(M);
    std::vector<Submodule> out;
    out.reserve(M->lattice.size());
    for (const ElemSet& s : M->lattice) out.push_back(Submodule{M, s});
    return out;
}

inline std::vector<Submodule> proper_submodules(const Module& M) {
    ensure_lattice(M);
    std::vector<Submodule> out;
    for (const ElemSet& s : M->lattice)
        if (s.size() < static_cast<std::size_t>(M->size)) out.push_back(Submodule{M, s});
    return out;
}

inline bool is_prime_submodule(const Submodule& N) {
    if (!N.is_proper()) throw input_error("is_prime_submodule: submodule must be proper");
    return compute_is_prime_submodule(*N.mod, N.members);
}

inline std::vector<Submodule> prime_submodules(const Module& M) {
    ensure_lattice(M);
    std::vector<Submodule> out;
    for (std::size_t i = 0; i < M->lattice.size(); ++i)
        if (M->lattice_prime[i]) out.push_back(Submodule{M, M->lattice[i]});
    return out;
}

/// M-rad(N): intersection of all prime submodules containing N; M when none.
inline ElemSet compute_m_radical(const FiniteModule& m, const std::vector<ElemSet>& lattice,
                                 const std::vector<char>& prime, const ElemSet& n) {
    ElemSet acc = full_set(m.size);
    bool any = false;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!prime[i]) continue;
        if (!set_subset(n, lattice[i])) continue;
        acc = set_intersection(acc, lattice[i]);
        any = true;
    }
    if (!any) return full_set(m.size);
    return acc;
}

inline Submodule m_radical(const Submodule& N) {
    const Module& M = N.mod;
    ensure_lattice(M);
    {
        std::lock_guard<std::mutex> lk(M->memo_mutex);
        auto it = M->mrad_memo.find(N.members);
        if (it != M->mrad_memo.end()) return Submodule{M, it->second};
    }
    ElemSet rad = compute_m_radical(*M, M->lattice, M->lattice_prime, N.members);
    {
        std::lock_guard<std::mutex> lk(M->memo_mutex);
        M->mrad_memo.emplace(N.members, rad);
    }
    return Submodule{M, std::move(rad)};
}

// ---------------------------------------------------------------------------
// Structure flags
// ---------------------------------------------------------------------------

struct StructureFlags {
    bool multiplication = false;  // every submodule N equals (N:M).M
    bool faithful = false;        // (0:M) = {0}
    bool cyclic = false;          // some m with Rm = M
    ElemSet um_set;               // U_M(R) = { r : rM = M }
};

inline StructureFlags structure_flags(const Module& M) {
    StructureFlags f;
    f.faithful = annihilator(M).is_zero();
    for (Elem g = 0; g < M->size && !f.cyclic; ++g) {
        ElemSet c;
        for (Elem r = 0; r < M->ring->size; ++r) c.push_back(M->act_of(r, g));
        if (sorted_unique(std::move(c)).size() == static_cast<std::size_t>(M->size))
            f.cyclic = true;
    }
    f.multiplication = true;
    for (const auto& N : enumerate_submodules(M)) {
        if (ideal_action(colon_ring_full(N), M).members != N.members) {
            f.multiplication = false;
            break;
        }
    }
    for (Elem r = 0; r < M->ring->size; ++r) {
        ElemSet im;
        for (Elem m = 0; m < M->size; ++m) im.push_back(M->act_of(r, m));
        if (sorted_unique(std::move(im)).size() == static_cast<std::size_t>(M->size))
            f.um_set.push_back(r);
    }
    return f;
}

/// Product of submodules of a multiplication module via presentation ideals:
/// N1 N2 = (N1:M)(N2:M).M
inline Submodule submodule_product(const Submodule& N1, const Submodule& N2) {
    if (!same_module(N1.mod, N2.mod)) throw input_error("submodule_product: module mismatch");
    const Module& M = N1.mod;
    if (!structure_flags(M).multiplication)
        throw input_error("submodule_product: module is not a multiplication module");
    return ideal_action(ideal_product(colon_ring_full(N1), colon_ring_full(N2)), M);
}

// ---------------------------------------------------------------------------
// Homomorphisms, quotients, products
// ---------------------------------------------------------------------------

struct ModuleHom {
    Module source;
    Module target;
    std::vector<Elem> map;

    Elem of(Elem a) const { return map[static_cast<std::size_t>(a)]; }
};

inline std::optional<std::string> module_hom_violation(const ModuleHom& f) {
    const FiniteModule& A = *f.source;
    const FiniteModule& B = *f.target;
    if (!same_ring(A.ring, B.ring)) return std::string("modules over different rings");
    if (f.map.size() != static_cast<std::size_t>(A.size)) return std::string("map length mismatch");
    for (Elem x : f.map)
        if (x < 0 || x >= B.size) return std::string("map image out of range");
    for (Elem a = 0; a < A.size; ++a)
        for (Elem b = 0; b < A.size; ++b)
            if (f.of(A.add_of(a, b)) != B.add_of(f.of(a), f.of(b)))
                return std::string("not additive");
    for (Elem r = 0; r < A.ring->size; ++r)
        for (Elem a = 0; a < A.size; ++a)
            if (f.of(A.act_of(r, a)) != B.act_of(r, f.of(a))) return std::string("not R-linear");
    return std::nullopt;
}

inline ModuleHom make_module_hom(Module source, Module target, std::vector<Elem> map) {
    ModuleHom f{std::move(source), std::move(target), std::move(map)};
    if (auto why = module_hom_violation(f)) throw input_error("make_module_hom: " + *why);
    return f;
}

inline ModuleHom identity_module_hom(const Module& M) {
    std::vector<Elem> m(static_cast<std::size_t>(M->size));
    for (Elem a = 0; a < M->size; ++a) m[static_cast<std::size_t>(a)] = a;
    return ModuleHom{M, M, std::move(m)};
}

inline Submodule hom_kernel(const ModuleHom& f) {
    ElemSet out;
    for (Elem a = 0; a < f.source->size; ++a)
        if (f.of(a) == f.target->zero_elem) out.push_back(a);
    return Submodule{f.source, std::move(out)};
}

inline bool is_epimorphism(const ModuleHom& f) {
    ElemSet im = sorted_unique(f.map);
    return im.size() == static_cast<std::size_t>(f.target->size);
}

inline Submodule hom_image(const ModuleHom& f, const Submodule& N) {
    if (!same_module(f.source, N.mod)) throw input_error("hom_image: module mismatch");
    ElemSet out;
    for (Elem a : N.members) out.push_back(f.of(a));
    return Submodule{f.target, sorted_unique(std::move(out))};
}

inline Submodule hom_preimage(const ModuleHom& f, const Submodule& K) {
    if (!same_module(f.target, K.mod)) throw input_error("hom_preimage: module mismatch");
    ElemSet out;
    for (Elem a = 0; a < f.source->size; ++a)
        if (K.contains(f.of(a))) out.push_back(a);
    return Submodule{f.source, std::move(out)};
}

/// M/K with coset representatives chosen as the smallest member index;
/// returns the quotient module and the canonical epimorphism.
inline std::pair<Module, ModuleHom> quotient_module(const Module& M, const Submodule& K) {
    if (!same_module(M, K.mod)) throw input_error("quotient_module: module mismatch");
    const int n = M->size;
    std::vector<Elem> rep(static_cast<std::size_t>(n), -1);
    for (Elem m = 0; m < n; ++m) {
        Elem best = -1;
        for (Elem k : K.members) {
            Elem c = M->add_of(m, k);
            if (best < 0 || c < best) best = c;
        }
        rep[static_cast<std::size_t>(m)] = best;
    }
    ElemSet reps;
    for (Elem m = 0; m < n; ++m)
        if (rep[static_cast<std::size_t>(m)] == m) reps.push_back(m);
    std::vector<Elem> idx(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) idx[static_cast<std::size_t>(reps[i])] = static_cast<Elem>(i);
    const int q = static_cast<int>(reps.size());
    std::vector<Elem> add(static_cast<std::size_t>(q) * q), act(static_cast<std::size_t>(M->ring->size) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            add[static_cast<std::size_t>(a) * q + b] =
                idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(M->add_of(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))])];
    for (Elem r = 0; r < M->ring->size; ++r)
        for (int a = 0; a < q; ++a)
            act[static_cast<std::size_t>(r) * q + a] =
                idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(M->act_of(r, reps[static_cast<std::size_t>(a)]))])];
    Module Q = make_module(M->ring, q, std::move(add), std::move(act),
                           idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(M->zero_elem)])],
                           M->label + "/" + set_to_string(K.members));
    std::vector<Elem> pmap(static_cast<std::size_t>(n));
    for (Elem m = 0; m < n; ++m)
        pmap[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(m)])];
    ModuleHom pi{M, Q, std::move(pmap)};
    return {Q, pi};
}

/// A submodule K of M as a module in its own right, with the inclusion hom.
inline std::pair<Module, ModuleHom> submodule_as_module(const Submodule& K) {
    const Module& M = K.mod;
    const int k = static_cast<int>(K.members.size());
    std::vector<Elem> idx(static_cast<std::size_t>(M->size), -1);
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(K.members[static_cast<std::size_t>(i)])] = i;
    std::vector<Elem> add(static_cast<std::size_t>(k) * k), act(static_cast<std::size_t>(M->ring->size) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            add[static_cast<std::size_t>(a) * k + b] =
                idx[static_cast<std::size_t>(M->add_of(K.members[static_cast<std::size_t>(a)], K.members[static_cast<std::size_t>(b)]))];
    for (Elem r = 0; r < M->ring->size; ++r)
        for (int a = 0; a < k; ++a)
            act[static_cast<std::size_t>(r) * k + a] =
                idx[static_cast<std::size_t>(M->act_of(r, K.members[static_cast<std::size_t>(a)]))];
    Module KM = make_module(M->ring, k, std::move(add), std::move(act),
                            idx[static_cast<std::size_t>(M->zero_elem)],
                            M->label + "|" + set_to_string(K.members));
    std::vector<Elem> inc(K.members.begin(), K.members.end());
    ModuleHom iota{KM, M, std::move(inc)};
    return {KM, iota};
}

/// Componentwise product of two modules over the same ring.
inline Module product_module(const Module& M1, const Module& M2) {
    if (!same_ring(M1->ring, M2->ring)) throw input_error("product_module: ring mismatch");
    const int n1 = M1->size, n2 = M2->size, n = n1 * n2;
    auto enc = [&](Elem a, Elem b) { return a * n2 + b; };
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), act(static_cast<std::size_t>(M1->ring->size) * n);
    for (Elem a1 = 0; a1 < n1; ++a1)
        for (Elem a2 = 0; a2 < n2; ++a2)
            for (Elem b1 = 0; b1 < n1; ++b1)
                for (Elem b2 = 0; b2 < n2; ++b2)
                    add[static_cast<std::size_t>(enc(a1, a2)) * n + enc(b1, b2)] =
                        enc(M1->add_of(a1, b1), M2->add_of(a2, b2));
    for (Elem r = 0; r < M1->ring->size; ++r)
        for (Elem a1 = 0; a1 < n1; ++a1)
            for (Elem a2 = 0; a2 < n2; ++a2)
                act[static_cast<std::size_t>(r) * n + enc(a1, a2)] =
                    enc(M1->act_of(r, a1), M2->act_of(r, a2));
    return make_module(M1->ring, n, std::move(add), std::move(act),
                       enc(M1->zero_elem, M2->zero_elem),
                       M1->label + "x" + M2->label);
}

/// N1 x N2 inside product_module(M1, M2), by the same pair encoding.
inline Submodule product_submodule(const Module& P, const Submodule& N1, const Submodule& N2) {
    const int n2 = N2.mod->size;
    ElemSet out;
    for (Elem a : N1.members)
        for (Elem b : N2.members) out.push_back(a * n2 + b);
    return Submodule{P, sorted_unique(std::move(out))};
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

enum class SubmodulePredicate {
    prime,
    primary,
    s_prime,
    s_primary,
    one_abs_primary,
    s_one_abs_primary,
    s_one_abs_prime,
    s_two_abs_primary,
};

inline const char* to_string(SubmodulePredicate p) {
    switch (p) {
        case SubmodulePredicate::prime: return "prime";
        case SubmodulePredicate::primary: return "primary";
        case SubmodulePredicate::s_prime: return "s_prime";
        case SubmodulePredicate::s_primary: return "s_primary";
        case SubmodulePredicate::one_abs_primary: return "one_abs_primary";
        case SubmodulePredicate::s_one_abs_primary: return "s_one_abs_primary";
        case SubmodulePredicate::s_one_abs_prime: return "s_one_abs_prime";
        case SubmodulePredicate::s_two_abs_primary: return "s_two_abs_primary";
    }
    return "?";
}

inline bool submodule_predicate_uses_s(SubmodulePredicate p) {
    switch (p) {
        case SubmodulePredicate::prime:
        case SubmodulePredicate::primary:
        case SubmodulePredicate::one_abs_primary: return false;
        default: return true;
    }
}

inline std::optional<SubmodulePredicate> submodule_predicate_from_string(const std::string& s) {
    for (auto p : {SubmodulePredicate::prime, SubmodulePredicate::primary,
                   SubmodulePredicate::s_prime, SubmodulePredicate::s_primary,
                   SubmodulePredicate::one_abs_primary, SubmodulePredicate::s_one_abs_primary,
                   SubmodulePredicate::s_one_abs_prime, SubmodulePredicate::s_two_abs_primary})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

/// Precomputed scan context for the per-witness violation search.
struct SubPredCtx {
    Ideal colon;      // (N:M)
    Ideal colon_rad;  // sqrt(N:M)
    ElemSet mrad;     // M-rad(N), filled only when needed
    ElemSet nonunits;
};

inline SubPredCtx make_sub_pred_ctx(const Module& M, const Submodule& N,
                                    SubmodulePredicate pred) {
    SubPredCtx ctx;
    ctx.colon = colon_ring_full(N);
    ctx.colon_rad = radical(ctx.colon);
    ctx.nonunits = M->ring->nonunits();
    if (pred == SubmodulePredicate::one_abs_primary ||
        pred == SubmodulePredicate::s_one_abs_primary)
        ctx.mrad = m_radical(N).members;
    return ctx;
}

/// First violating tuple under witness s, empty when s certifies everything.
inline std::vector<Elem> submodule_predicate_violation(const Module& M, const Submodule& N,
                                                       const SubPredCtx& ctx,
                                                       SubmodulePredicate pred, Elem s) {
    const Ring& R = M->ring;
    const Ideal& colon = ctx.colon;
    const Ideal& colon_rad = ctx.colon_rad;
    const ElemSet& nonunits = ctx.nonunits;
    const ElemSet& mrad = ctx.mrad;
    switch (pred) {
        case SubmodulePredicate::prime:
            for (Elem r = 0; r < R->size; ++r) {
                if (colon.contains(r)) continue;
                for (Elem m = 0; m < M->size; ++m)
                    if (N.contains(M->act_of(r, m)) && !N.contains(m)) return {r, m};
            }
            return {};
        case SubmodulePredicate::primary:
            for (Elem r = 0; r < R->size; ++r) {
                if (colon_rad.contains(r)) continue;
                for (Elem m = 0; m < M->size; ++m)
                    if (N.contains(M->act_of(r, m)) && !N.contains(m)) return {r, m};
            }
            return {};
        case SubmodulePredicate::s_prime:
            for (Elem r = 0; r < R->size; ++r) {
                if (colon.contains(R->mul_of(s, r))) continue;
                for (Elem m = 0; m < M->size; ++m)
                    if (N.contains(M->act_of(r, m)) && !N.contains(M->act_of(s, m)))
                        return {r, m};
            }
            return {};
        case SubmodulePredicate::s_primary:
            for (Elem a = 0; a < R->size; ++a) {
                if (colon_rad.contains(R->mul_of(s, a))) continue;
                for (Elem m = 0; m < M->size; ++m)
                    if (N.contains(M->act_of(a, m)) && !N.contains(M->act_of(s, m)))
                        return {a, m};
            }
            return {};
        case SubmodulePredicate::one_abs_primary:
            for (std::size_t ia = 0; ia < nonunits.size(); ++ia)
                for (std::size_t ib = ia; ib < nonunits.size(); ++ib) {
                    Elem ab = R->mul_of(nonunits[ia], nonunits[ib]);
                    if (colon.contains(ab)) continue;
                    for (Elem m = 0; m < M->size; ++m)
                        if (N.contains(M->act_of(ab, m)) && !set_contains(mrad, m))
                            return {nonunits[ia], nonunits[ib], m};
                }
            return {};
        case SubmodulePredicate::s_one_abs_primary:
            for (std::size_t ia = 0; ia < nonunits.size(); ++ia)
                for (std::size_t ib = ia; ib < nonunits.size(); ++ib) {
                    Elem ab = R->mul_of(nonunits[ia], nonunits[ib]);
                    if (colon.contains(R->mul_of(s, ab))) continue;
                    for (Elem m = 0; m < M->size; ++m)
                        if (N.contains(M->act_of(ab, m)) && !set_contains(mrad, M->act_of(s, m)))
                            return {nonunits[ia], nonunits[ib], m};
                }
            return {};
        case SubmodulePredicate::s_one_abs_prime:
            for (std::size_t ia = 0; ia < nonunits.size(); ++ia)
                for (std::size_t ib = ia; ib < nonunits.size(); ++ib) {
                    Elem ab = R->mul_of(nonunits[ia], nonunits[ib]);
                    if (colon.contains(R->mul_of(s, ab))) continue;
                    for (Elem m = 0; m < M->size; ++m)
                        if (N.contains(M->act_of(ab, m)) && !N.contains(M->act_of(s, m)))
                            return {nonunits[ia], nonunits[ib], m};
                }
            return {};
        case SubmodulePredicate::s_two_abs_primary:
            for (Elem a = 0; a < R->size; ++a)
                for (Elem b = 0; b < R->size; ++b) {
                    Elem ab = R->mul_of(a, b);
                    if (colon_rad.contains(R->mul_of(s, ab))) continue;
                    for (Elem m = 0; m < M->size; ++m)
                        if (N.contains(M->act_of(ab, m)) &&
                            !N.contains(M->act_of(R->mul_of(s, a), m)) &&
                            !N.contains(M->act_of(R->mul_of(s, b), m)))
                            return {a, b, m};
                }
            return {};
    }
    return {};
}

inline bool submodule_predicate_certified_by(const Module& M, const Submodule& N,
                                             SubmodulePredicate pred, Elem s) {
    auto ctx = make_sub_pred_ctx(M, N, pred);
    return submodule_predicate_violation(M, N, ctx, pred, s).empty();
}

/**
 * check_submodule_predicate: fixed-s exhaustive scan over module tuples.
 *
 * Gate for S-predicates: (N:M) cap S = empty. Quantifiers: a, b range over
 * the non-units of R for the 1-absorbing variants and over all of R
 * otherwise; m ranges over M.
 */
inline PredicateReport check_submodule_predicate(const Module& M, const Submodule& N,
                                                 const std::optional<MultiplicativeSet>& S,
                                                 SubmodulePredicate pred) {
    if (!same_module(M, N.mod)) throw input_error("check_submodule_predicate: module mismatch");
    PredicateReport rep;
    rep.predicate = to_string(pred);
    if (M->ring->is_zero_ring() || M->is_zero_module()) {
        rep.notes = M->is_zero_module() ? "zero module: no proper submodules"
                                        : "zero ring: predicates are vacuous";
        return rep;
    }
    if (!N.is_proper()) throw input_error("check_submodule_predicate: submodule must be proper");
    const bool uses_s = submodule_predicate_uses_s(pred);
    if (uses_s && !S) throw input_error("check_submodule_predicate: S required for S-predicate");

    const SubPredCtx ctx = make_sub_pred_ctx(M, N, pred);
    if (uses_s) {
        ElemSet overlap = set_intersection(ctx.colon.members, S->members);
        if (!overlap.empty()) {
            rep.notes = "gate (N:M) cap S violated at s=" + std::to_string(overlap.front());
            return rep;
        }
    }
    rep.applicable = true;

    if (!uses_s) {
        auto bad = submodule_predicate_violation(M, N, ctx, pred, M->ring->one_elem);
        rep.holds = bad.empty();
        if (!rep.holds) rep.counterexample = std::move(bad);
        return rep;
    }
    std::vector<Elem> first_bad;
    bool have_bad = false;
    for (Elem s : S->members) {
        auto bad = submodule_predicate_violation(M, N, ctx, pred, s);
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

// ---------------------------------------------------------------------------
// Characterization forms (the four-way theorem)
// ---------------------------------------------------------------------------

enum class CharForm { elementwise, Ibm, IJm, IJK };

inline const char* to_string(CharForm f) {
    switch (f) {
        case CharForm::elementwise: return "elementwise";
        case CharForm::Ibm: return "Ibm";
        case CharForm::IJm: return "IJm";
        case CharForm::IJK: return "IJK";
    }
    return "?";
}

/**
 * check_characterization: evaluates one of the quantified forms exactly.
 * I, J range over proper ideals of R, b over non-units, K over all
 * submodules of M; fixed-s semantics as everywhere else.
 */
inline PredicateReport check_characterization(const Module& M, const Submodule& N,
                                              const MultiplicativeSet& S, CharForm form) {
    if (form == CharForm::elementwise) {
        auto rep = check_submodule_predicate(M, N, S, SubmodulePredicate::s_one_abs_primary);
        rep.predicate = std::string("char_") + to_string(form);
        return rep;
    }
    if (!same_module(M, N.mod)) throw input_error("check_characterization: module mismatch");
    PredicateReport rep;
    rep.predicate = std::string("char_") + to_string(form);
    if (M->ring->is_zero_ring() || M->is_zero_module()) {
        rep.notes = "degenerate instance";
        return rep;
    }
    if (!N.is_proper()) throw input_error("check_characterization: submodule must be proper");
    const Ideal colon = colon_ring_full(N);
    {
        ElemSet overlap = set_intersection(colon.members, S.members);
        if (!overlap.empty()) {
            rep.notes = "gate (N:M) cap S violated at s=" + std::to_string(overlap.front());
            return rep;
        }
    }
    rep.applicable = true;

    const Ring& R = M->ring;
    const ElemSet mrad = m_radical(N).members;
    const ElemSet nonunits = R->nonunits();
    const std::vector<Ideal> ideals = proper_ideals(R);
    std::vector<ElemSet> submods;
    if (form == CharForm::IJK) {
        ensure_lattice(M);
        submods = M->lattice;
    }

    auto s_times_set_in = [&](Elem s, const ElemSet& xs, const Ideal& target) {
        for (Elem x : xs)
            if (!target.contains(R->mul_of(s, x))) return false;
        return true;
    };

    auto violation = [&](Elem s) -> std::vector<Elem> {
        if (form == CharForm::Ibm) {
            for (const Ideal& I : ideals)
                for (Elem b : nonunits) {
                    // sIb subseteq (N:M)?
                    bool concl1 = true;
                    for (Elem i : I.members)
                        if (!colon.contains(R->mul_of(R->mul_of(s, i), b))) {
                            concl1 = false;
                            break;
                        }
                    if (concl1) continue;
                    for (Elem m = 0; m < M->size; ++m) {
                        bool premise = true;
                        for (Elem i : I.members)
                            if (!N.contains(M->act_of(R->mul_of(i, b), m))) {
                                premise = false;
                                break;
                            }
                        if (premise && !set_contains(mrad, M->act_of(s, m)))
                            return {b, m};  // violating (I, b, m); I reported via notes
                    }
                }
            return {};
        }
        if (form == CharForm::IJm) {
            for (const Ideal& I : ideals)
                for (const Ideal& J : ideals) {
                    Ideal IJ = ideal_product(I, J);
                    if (s_times_set_in(s, IJ.members, colon)) continue;
                    for (Elem m = 0; m < M->size; ++m) {
                        bool premise = true;
                        for (Elem x : IJ.members)
                            if (!N.contains(M->act_of(x, m))) {
                                premise = false;
                                break;
                            }
                        if (premise && !set_contains(mrad, M->act_of(s, m))) return {m};
                    }
                }
            return {};
        }
        // IJK
        for (const Ideal& I : ideals)
            for (const Ideal& J : ideals) {
                Ideal IJ = ideal_product(I, J);
                if (s_times_set_in(s, IJ.members, colon)) continue;
                for (const ElemSet& K : submods) {
                    bool premise = true;
                    for (Elem x : IJ.members) {
                        for (Elem k : K)
                            if (!N.contains(M->act_of(x, k))) {
                                premise = false;
                                break;
                            }
                        if (!premise) break;
                    }
                    if (!premise) continue;
                    bool concl2 = true;
                    for (Elem k : K)
                        if (!set_contains(mrad, M->act_of(s, k))) {
                            concl2 = false;
                            break;
                        }
                    if (!concl2) return {K.empty() ? M->zero_elem : K.front()};
                }
            }
        return {};
    };

    std::vector<Elem> first_bad;
    bool have_bad = false;
    for (Elem s : S.members) {
        auto bad = violation(s);
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
