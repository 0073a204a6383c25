#pragma once

/**
 * @file constructions.hpp
 * @brief Ring/module constructions compiled to table-backed objects:
 *        products, idealization R(+)M, amalgamation A |><|^f J, duplication
 *        along an ideal, and localization at a multiplicative set.
 *
 * Every construction compiles to explicit tables once; afterwards the result
 * is indistinguishable from a hand-built ring or module. The returned context
 * structs retain the element correspondence (encode/decode) so ideals,
 * submodules and multiplicative sets can be transported along.
 */

#include "absorb/module.hpp"

namespace absorb {

// ---------------------------------------------------------------------------
// Product rings
// ---------------------------------------------------------------------------

struct ProductRing {
    Ring ring;
    std::vector<Ring> factors;

    Elem encode(const std::vector<Elem>& parts) const {
        Elem e = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i]->size + parts[i];
        return e;
    }
    std::vector<Elem> decode(Elem e) const {
        std::vector<Elem> parts(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            parts[i] = e % factors[i]->size;
            e /= factors[i]->size;
        }
        return parts;
    }
    /// componentwise projection of a subset
    ElemSet project(const ElemSet& s, std::size_t which) const {
        ElemSet out;
        for (Elem e : s) out.push_back(decode(e)[which]);
        return sorted_unique(std::move(out));
    }
    ElemSet from_factor_sets(const std::vector<ElemSet>& sets) const {
        ElemSet out;
        std::vector<Elem> parts(sets.size());
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == sets.size()) {
                out.push_back(encode(parts));
                return;
            }
            for (Elem e : sets[i]) {
                parts[i] = e;
                rec(i + 1);
            }
        };
        rec(0);
        return sorted_unique(std::move(out));
    }
};

inline ProductRing product_ring(std::vector<Ring> factors) {
    if (factors.empty()) throw input_error("product_ring: need at least one factor");
    long long total = 1;
    std::string label;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        total *= factors[i]->size;
        if (i) label += "x";
        label += factors[i]->label;
        if (total > 100000) throw input_error("product_ring: carrier too large");
    }
    ProductRing ctx;
    ctx.factors = std::move(factors);
    const int n = static_cast<int>(total);
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a) {
        auto pa = ctx.decode(a);
        for (Elem b = 0; b < n; ++b) {
            auto pb = ctx.decode(b);
            std::vector<Elem> ps(ctx.factors.size()), pm(ctx.factors.size());
            for (std::size_t i = 0; i < ctx.factors.size(); ++i) {
                ps[i] = ctx.factors[i]->add_of(pa[i], pb[i]);
                pm[i] = ctx.factors[i]->mul_of(pa[i], pb[i]);
            }
            add[static_cast<std::size_t>(a) * n + b] = ctx.encode(ps);
            mul[static_cast<std::size_t>(a) * n + b] = ctx.encode(pm);
        }
    }
    std::vector<Elem> zeros, ones;
    for (const auto& f : ctx.factors) {
        zeros.push_back(f->zero_elem);
        ones.push_back(f->one_elem);
    }
    ctx.ring = make_ring(n, std::move(add), std::move(mul), ctx.encode(zeros), ctx.encode(ones),
                         label);
    return ctx;
}

/// Componentwise module M_1 x ... x M_k over a product ring (M_i over factor i).
inline Module componentwise_module(const ProductRing& ctx, const std::vector<Module>& mods) {
    if (mods.size() != ctx.factors.size())
        throw input_error("componentwise_module: factor count mismatch");
    long long total = 1;
    std::string label;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        if (!same_ring(mods[i]->ring, ctx.factors[i]))
            throw input_error("componentwise_module: module " + std::to_string(i) +
                              " is not over ring factor " + std::to_string(i));
        total *= mods[i]->size;
        if (i) label += "x";
        label += mods[i]->label;
        if (total > 100000) throw input_error("componentwise_module: carrier too large");
    }
    const int n = static_cast<int>(total);
    auto decode = [&](Elem e) {
        std::vector<Elem> parts(mods.size());
        for (std::size_t i = mods.size(); i-- > 0;) {
            parts[i] = e % mods[i]->size;
            e /= mods[i]->size;
        }
        return parts;
    };
    auto encode = [&](const std::vector<Elem>& parts) {
        Elem e = 0;
        for (std::size_t i = 0; i < mods.size(); ++i) e = e * mods[i]->size + parts[i];
        return e;
    };
    std::vector<Elem> add(static_cast<std::size_t>(n) * n),
        act(static_cast<std::size_t>(ctx.ring->size) * n);
    for (Elem a = 0; a < n; ++a) {
        auto pa = decode(a);
        for (Elem b = 0; b < n; ++b) {
            auto pb = decode(b);
            std::vector<Elem> ps(mods.size());
            for (std::size_t i = 0; i < mods.size(); ++i) ps[i] = mods[i]->add_of(pa[i], pb[i]);
            add[static_cast<std::size_t>(a) * n + b] = encode(ps);
        }
    }
    for (Elem r = 0; r < ctx.ring->size; ++r) {
        auto pr = ctx.decode(r);
        for (Elem a = 0; a < n; ++a) {
            auto pa = decode(a);
            std::vector<Elem> ps(mods.size());
            for (std::size_t i = 0; i < mods.size(); ++i) ps[i] = mods[i]->act_of(pr[i], pa[i]);
            act[static_cast<std::size_t>(r) * n + a] = encode(ps);
        }
    }
    std::vector<Elem> zeros;
    for (const auto& m : mods) zeros.push_back(m->zero_elem);
    return make_module(ctx.ring, n, std::move(add), std::move(act), encode(zeros), label);
}

/// Member set of a componentwise submodule N_1 x ... x N_k.
inline ElemSet componentwise_members(const std::vector<Module>& mods,
                                     const std::vector<ElemSet>& sets) {
    ElemSet out;
    std::vector<Elem> parts(sets.size());
    std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem acc) {
        if (i == sets.size()) {
            out.push_back(acc);
            return;
        }
        for (Elem e : sets[i]) rec(i + 1, acc * mods[i]->size + e);
    };
    rec(0, 0);
    return sorted_unique(std::move(out));
}

// ---------------------------------------------------------------------------
// Quotient ring
// ---------------------------------------------------------------------------

/// R/I with smallest-index coset representatives; returns the canonical hom.
inline std::pair<Ring, RingHom> quotient_ring(const Ring& R, const Ideal& I) {
    if (!same_ring(R, I.ring)) throw input_error("quotient_ring: ring mismatch");
    const int n = R->size;
    std::vector<Elem> rep(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a) {
        Elem best = -1;
        for (Elem i : I.members) {
            Elem c = R->add_of(a, i);
            if (best < 0 || c < best) best = c;
        }
        rep[static_cast<std::size_t>(a)] = best;
    }
    ElemSet reps;
    for (Elem a = 0; a < n; ++a)
        if (rep[static_cast<std::size_t>(a)] == a) reps.push_back(a);
    std::vector<Elem> idx(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) idx[static_cast<std::size_t>(reps[i])] = static_cast<Elem>(i);
    const int q = static_cast<int>(reps.size());
    std::vector<Elem> add(static_cast<std::size_t>(q) * q), mul(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Elem ra = reps[static_cast<std::size_t>(a)], rb = reps[static_cast<std::size_t>(b)];
            add[static_cast<std::size_t>(a) * q + b] =
                idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(R->add_of(ra, rb))])];
            mul[static_cast<std::size_t>(a) * q + b] =
                idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(R->mul_of(ra, rb))])];
        }
    Ring Q = make_ring(q, std::move(add), std::move(mul),
                       idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(R->zero_elem)])],
                       idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(R->one_elem)])],
                       R->label + "/" + set_to_string(I.members));
    std::vector<Elem> hmap(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a)
        hmap[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(rep[static_cast<std::size_t>(a)])];
    return {Q, RingHom{R, Q, std::move(hmap)}};
}

/// R/I as an R-module (action through the quotient map).
inline Module quotient_ring_as_module(const Ring& R, const Ideal& I) {
    auto M = ring_as_module(R);
    return quotient_module(M, Submodule{M, I.members}).first;
}

// ---------------------------------------------------------------------------
// Idealization R(+)M
// ---------------------------------------------------------------------------

struct Idealization {
    Ring ring;  // R(+)M
    Ring base_ring;
    Module base_module;

    Elem encode(Elem r, Elem m) const { return r * base_module->size + m; }
    std::pair<Elem, Elem> decode(Elem e) const {
        return {e / base_module->size, e % base_module->size};
    }
};

/// (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1) on R x M pairs.
inline Idealization idealization(const Ring& R, const Module& M) {
    if (!same_ring(R, M->ring)) throw input_error("idealization: M is not an R-module");
    Idealization ctx;
    ctx.base_ring = R;
    ctx.base_module = M;
    const int n = R->size * M->size;
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (Elem r1 = 0; r1 < R->size; ++r1)
        for (Elem m1 = 0; m1 < M->size; ++m1) {
            Elem a = ctx.encode(r1, m1);
            for (Elem r2 = 0; r2 < R->size; ++r2)
                for (Elem m2 = 0; m2 < M->size; ++m2) {
                    Elem b = ctx.encode(r2, m2);
                    add[static_cast<std::size_t>(a) * n + b] =
                        ctx.encode(R->add_of(r1, r2), M->add_of(m1, m2));
                    mul[static_cast<std::size_t>(a) * n + b] =
                        ctx.encode(R->mul_of(r1, r2),
                                   M->add_of(M->act_of(r1, m2), M->act_of(r2, m1)));
                }
        }
    ctx.ring = make_ring(n, std::move(add), std::move(mul),
                         ctx.encode(R->zero_elem, M->zero_elem),
                         ctx.encode(R->one_elem, M->zero_elem), R->label + "(+)" + M->label);
    return ctx;
}

/// I(+)N, an ideal of R(+)M provided I.M \subseteq N.
inline Ideal idealization_ideal(const Idealization& ctx, const Ideal& I, const Submodule& N) {
    if (!same_ring(I.ring, ctx.base_ring) || !same_module(N.mod, ctx.base_module))
        throw input_error("idealization_ideal: component mismatch");
    for (Elem i : I.members)
        for (Elem m = 0; m < ctx.base_module->size; ++m)
            if (!N.contains(ctx.base_module->act_of(i, m)))
                throw input_error("idealization_ideal: IM not inside N, witness i=" +
                                  std::to_string(i) + " m=" + std::to_string(m));
    ElemSet out;
    for (Elem i : I.members)
        for (Elem nmem : N.members) out.push_back(ctx.encode(i, nmem));
    return Ideal{ctx.ring, sorted_unique(std::move(out))};
}

enum class IdealizationMode { zero, full };

/// S(+)0 = {(s,0)} or S(+)M = {(s,m) : m in M}.
inline MultiplicativeSet idealization_multset(const Idealization& ctx,
                                              const MultiplicativeSet& S, IdealizationMode mode) {
    if (!same_ring(S.ring, ctx.base_ring))
        throw input_error("idealization_multset: ring mismatch");
    ElemSet out;
    for (Elem s : S.members) {
        if (mode == IdealizationMode::zero)
            out.push_back(ctx.encode(s, ctx.base_module->zero_elem));
        else
            for (Elem m = 0; m < ctx.base_module->size; ++m) out.push_back(ctx.encode(s, m));
    }
    return MultiplicativeSet{ctx.ring, sorted_unique(std::move(out))};
}

// ---------------------------------------------------------------------------
// Amalgamation A |><|^f J  (subring {(a, f(a)+j)} of A x B)
// ---------------------------------------------------------------------------

struct Amalgamation {
    Ring ring;  // A |><|^f J
    Ring a_ring;
    Ring b_ring;
    RingHom f;  // A -> B
    Ideal j;    // ideal of B

    // element index = aIdx * |J| + position of j in J.members;
    // the pair value is (a, f(a)+j)
    /// decode to the actual pair (a, f(a)+j) in A x B
    std::pair<Elem, Elem> decode(Elem e) const {
        Elem a = e / static_cast<Elem>(j.members.size());
        Elem jv = j.members[static_cast<std::size_t>(e % static_cast<Elem>(j.members.size()))];
        return {a, b_ring->add_of(f.of(a), jv)};
    }
    /// index of the pair (a, b_val); b_val - f(a) must lie in J
    Elem index_of(Elem a, Elem b_val) const {
        Elem jv = b_ring->sub_of(b_val, f.of(a));
        auto it = std::lower_bound(j.members.begin(), j.members.end(), jv);
        if (it == j.members.end() || *it != jv)
            throw std::logic_error("amalgamation: pair not in carrier");
        return a * static_cast<Elem>(j.members.size()) +
               static_cast<Elem>(it - j.members.begin());
    }
};

inline Amalgamation amalgamation(const Ring& A, const Ring& B, const RingHom& f, const Ideal& J,
                                 const std::string& label_override = "") {
    if (!same_ring(f.source, A) || !same_ring(f.target, B))
        throw input_error("amalgamation: hom endpoints mismatch");
    if (auto why = ring_hom_violation(f)) throw input_error("amalgamation: bad hom: " + *why);
    if (!same_ring(J.ring, B)) throw input_error("amalgamation: J must be an ideal of B");
    Amalgamation ctx;
    ctx.a_ring = A;
    ctx.b_ring = B;
    ctx.f = f;
    ctx.j = J;
    const int n = A->size * static_cast<int>(J.members.size());
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (Elem e1 = 0; e1 < n; ++e1) {
        auto [a1, b1] = ctx.decode(e1);
        for (Elem e2 = 0; e2 < n; ++e2) {
            auto [a2, b2] = ctx.decode(e2);
            add[static_cast<std::size_t>(e1) * n + e2] =
                ctx.index_of(A->add_of(a1, a2), B->add_of(b1, b2));
            mul[static_cast<std::size_t>(e1) * n + e2] =
                ctx.index_of(A->mul_of(a1, a2), B->mul_of(b1, b2));
        }
    }
    ctx.ring = make_ring(n, std::move(add), std::move(mul),
                         ctx.index_of(A->zero_elem, B->zero_elem),
                         ctx.index_of(A->one_elem, B->one_elem),
                         label_override.empty()
                             ? A->label + "><" + B->label + ":" + set_to_string(J.members)
                             : label_override);
    return ctx;
}

inline Amalgamation duplication_ring(const Ring& R, const Ideal& I) {
    return amalgamation(R, R, identity_hom(R), I, R->label + "><" + set_to_string(I.members));
}

/// I |><|^f J = {(i, f(i)+j)} for an ideal I of A.
inline Ideal amalgamation_ideal(const Amalgamation& ctx, const Ideal& I) {
    if (!same_ring(I.ring, ctx.a_ring)) throw input_error("amalgamation_ideal: ring mismatch");
    ElemSet out;
    for (Elem e = 0; e < ctx.ring->size; ++e)
        if (I.contains(ctx.decode(e).first)) out.push_back(e);
    return Ideal{ctx.ring, std::move(out)};
}

/// S |><|^f J = {(s, f(s)+j)} for a multiplicative subset S of A.
inline MultiplicativeSet amalgamation_multset(const Amalgamation& ctx,
                                              const MultiplicativeSet& S) {
    if (!same_ring(S.ring, ctx.a_ring)) throw input_error("amalgamation_multset: ring mismatch");
    ElemSet out;
    for (Elem e = 0; e < ctx.ring->size; ++e)
        if (S.contains(ctx.decode(e).first)) out.push_back(e);
    return MultiplicativeSet{ctx.ring, std::move(out)};
}

/// The subring f(A)+J of B, re-indexed, with its value map into B.
struct SubringFAJ {
    Ring ring;
    std::vector<Elem> to_b;    // carrier values in B, ascending
    std::vector<Elem> from_b;  // B index -> subring index or -1
};

inline SubringFAJ subring_fA_plus_J(const Ring& B, const RingHom& f, const Ideal& J) {
    if (!same_ring(f.target, B) || !same_ring(J.ring, B))
        throw input_error("subring_fA_plus_J: component mismatch");
    ElemSet carrier;
    for (Elem a = 0; a < f.source->size; ++a)
        for (Elem j : J.members) carrier.push_back(B->add_of(f.of(a), j));
    carrier = sorted_unique(std::move(carrier));
    SubringFAJ out;
    out.to_b = carrier;
    out.from_b.assign(static_cast<std::size_t>(B->size), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i)
        out.from_b[static_cast<std::size_t>(carrier[i])] = static_cast<Elem>(i);
    const int n = static_cast<int>(carrier.size());
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Elem bx = carrier[static_cast<std::size_t>(x)], by = carrier[static_cast<std::size_t>(y)];
            Elem sa = out.from_b[static_cast<std::size_t>(B->add_of(bx, by))];
            Elem sm = out.from_b[static_cast<std::size_t>(B->mul_of(bx, by))];
            if (sa < 0 || sm < 0)
                throw std::logic_error("subring_fA_plus_J: carrier not closed");
            add[static_cast<std::size_t>(x) * n + y] = sa;
            mul[static_cast<std::size_t>(x) * n + y] = sm;
        }
    out.ring = make_ring(n, std::move(add), std::move(mul),
                         out.from_b[static_cast<std::size_t>(B->zero_elem)],
                         out.from_b[static_cast<std::size_t>(B->one_elem)],
                         "f(" + f.source->label + ")+" + set_to_string(J.members));
    return out;
}

/// K-bar = {(a, f(a)+j) : f(a)+j in K} for K an ideal of f(A)+J.
inline Ideal bar_ideal(const Amalgamation& ctx, const SubringFAJ& sub, const Ideal& K) {
    if (!same_ring(K.ring, sub.ring)) throw input_error("bar_ideal: K must live in f(A)+J");
    if (auto why = ideal_violation(sub.ring, K.members))
        throw input_error("bar_ideal: K is not an ideal of f(A)+J: " + *why);
    ElemSet out;
    for (Elem e = 0; e < ctx.ring->size; ++e) {
        Elem bval = ctx.decode(e).second;
        Elem sidx = sub.from_b[static_cast<std::size_t>(bval)];
        if (sidx >= 0 && K.contains(sidx)) out.push_back(e);
    }
    return Ideal{ctx.ring, std::move(out)};
}

/// S2-bar = {(r, f(r)+j) : f(r)+j in S2} for S2 multiplicative in f(A)+J.
inline MultiplicativeSet bar_multset(const Amalgamation& ctx, const SubringFAJ& sub,
                                     const MultiplicativeSet& S2) {
    if (!same_ring(S2.ring, sub.ring)) throw input_error("bar_multset: S2 must live in f(A)+J");
    ElemSet out;
    for (Elem e = 0; e < ctx.ring->size; ++e) {
        Elem bval = ctx.decode(e).second;
        Elem sidx = sub.from_b[static_cast<std::size_t>(bval)];
        if (sidx >= 0 && S2.contains(sidx)) out.push_back(e);
    }
    return MultiplicativeSet{ctx.ring, std::move(out)};
}

// ---------------------------------------------------------------------------
// Duplication of a module along an ideal
// ---------------------------------------------------------------------------

struct DuplicationModule {
    Module mod;       // M |><| I over R |><| I
    Amalgamation ring_ctx;
    Module base;      // M
    Ideal ideal;      // I
    Submodule im;     // I.M inside M
    std::vector<std::pair<Elem, Elem>> pairs;  // carrier, lexicographic
    std::map<std::pair<Elem, Elem>, Elem> index;

    Elem index_of(Elem m, Elem mp) const {
        auto it = index.find({m, mp});
        if (it == index.end()) throw std::logic_error("duplication: pair not in carrier");
        return it->second;
    }
};

/// M |><| I = {(m,m') : m - m' in IM} as a module over R |><| I with action
/// (r, r+i)(m,m') = (r m, (r+i) m').
inline DuplicationModule duplication_module(const Module& M, const Ideal& I) {
    if (!same_ring(M->ring, I.ring)) throw input_error("duplication_module: ring mismatch");
    DuplicationModule ctx;
    ctx.ring_ctx = duplication_ring(M->ring, I);
    ctx.base = M;
    ctx.ideal = I;
    ctx.im = ideal_action(I, M);
    for (Elem m = 0; m < M->size; ++m)
        for (Elem mp = 0; mp < M->size; ++mp)
            if (ctx.im.contains(M->sub_of(m, mp))) {
                ctx.index.emplace(std::make_pair(m, mp), static_cast<Elem>(ctx.pairs.size()));
                ctx.pairs.emplace_back(m, mp);
            }
    const int n = static_cast<int>(ctx.pairs.size());
    const Ring& D = ctx.ring_ctx.ring;
    std::vector<Elem> add(static_cast<std::size_t>(n) * n),
        act(static_cast<std::size_t>(D->size) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [m1, p1] = ctx.pairs[static_cast<std::size_t>(x)];
            auto [m2, p2] = ctx.pairs[static_cast<std::size_t>(y)];
            add[static_cast<std::size_t>(x) * n + y] =
                ctx.index_of(M->add_of(m1, m2), M->add_of(p1, p2));
        }
    for (Elem r = 0; r < D->size; ++r) {
        auto [rv, r_plus_i] = ctx.ring_ctx.decode(r);
        for (int x = 0; x < n; ++x) {
            auto [m, mp] = ctx.pairs[static_cast<std::size_t>(x)];
            act[static_cast<std::size_t>(r) * n + x] =
                ctx.index_of(M->act_of(rv, m), M->act_of(r_plus_i, mp));
        }
    }
    ctx.mod = make_module(D, n, std::move(add), std::move(act),
                          ctx.index_of(M->zero_elem, M->zero_elem),
                          M->label + "><" + set_to_string(I.members));
    return ctx;
}

enum class DupVariant { bowtie, bar };

/// N |><| I = {(n,m) : n in N} or N-bar = {(m,n) : n in N}, inside M |><| I.
inline Submodule dup_submodule(const DuplicationModule& ctx, const Submodule& N,
                               DupVariant variant) {
    if (!same_module(N.mod, ctx.base)) throw input_error("dup_submodule: module mismatch");
    ElemSet out;
    for (Elem e = 0; e < ctx.mod->size; ++e) {
        auto [m, mp] = ctx.pairs[static_cast<std::size_t>(e)];
        Elem probe = variant == DupVariant::bowtie ? m : mp;
        if (N.contains(probe)) out.push_back(e);
    }
    return Submodule{ctx.mod, std::move(out)};
}

/// S |><| I = {(s, s+i)} or S-bar = {(a, a+i) : a+i in S}, inside R |><| I.
inline MultiplicativeSet dup_multset(const DuplicationModule& ctx, const MultiplicativeSet& S,
                                     DupVariant variant) {
    if (!same_ring(S.ring, ctx.base->ring)) throw input_error("dup_multset: ring mismatch");
    const Ring& D = ctx.ring_ctx.ring;
    ElemSet out;
    for (Elem e = 0; e < D->size; ++e) {
        auto [r, r_plus_i] = ctx.ring_ctx.decode(e);
        Elem probe = variant == DupVariant::bowtie ? r : r_plus_i;
        if (S.contains(probe)) out.push_back(e);
    }
    return MultiplicativeSet{D, std::move(out)};
}

// ---------------------------------------------------------------------------
// Localization
// ---------------------------------------------------------------------------

struct Localization {
    Ring ring;       // S^-1 R
    RingHom hom;     // R -> S^-1 R, r |-> class of (r s0, s0)
    Ring base;
    MultiplicativeSet mset;
    // class_index[rIdx * |S| + sPos] = element of S^-1 R representing r/s
    std::vector<Elem> class_index;

    Elem cls(Elem r, std::size_t s_pos) const {
        return class_index[static_cast<std::size_t>(r) * mset.members.size() + s_pos];
    }
    Elem cls_value(Elem r, Elem s_val) const {
        auto it = std::lower_bound(mset.members.begin(), mset.members.end(), s_val);
        if (it == mset.members.end() || *it != s_val)
            throw std::logic_error("localization: denominator not in S");
        return cls(r, static_cast<std::size_t>(it - mset.members.begin()));
    }
};

/// S^-1 R as equivalence classes of pairs (r,s), with
/// (r1,s1) ~ (r2,s2) iff u(r1 s2 - r2 s1) = 0 for some u in S.
inline Localization localize(const Ring& R, const MultiplicativeSet& S) {
    if (!same_ring(R, S.ring)) throw input_error("localize: ring mismatch");
    Localization ctx;
    ctx.base = R;
    ctx.mset = S;
    const std::size_t k = S.members.size();
    const std::size_t total = static_cast<std::size_t>(R->size) * k;
    auto equiv = [&](Elem r1, Elem s1, Elem r2, Elem s2) {
        Elem d = R->sub_of(R->mul_of(r1, s2), R->mul_of(r2, s1));
        for (Elem u : S.members)
            if (R->mul_of(u, d) == R->zero_elem) return true;
        return false;
    };
    // group pairs into classes; representatives in lexicographic (r, s) order
    std::vector<Elem> cls(total, -1);
    std::vector<std::pair<Elem, Elem>> rep_pairs;
    for (Elem r = 0; r < R->size; ++r)
        for (std::size_t sp = 0; sp < k; ++sp) {
            std::size_t me = static_cast<std::size_t>(r) * k + sp;
            if (cls[me] >= 0) continue;
            Elem id = static_cast<Elem>(rep_pairs.size());
            rep_pairs.emplace_back(r, S.members[sp]);
            cls[me] = id;
            for (Elem r2 = 0; r2 < R->size; ++r2)
                for (std::size_t sp2 = 0; sp2 < k; ++sp2) {
                    std::size_t other = static_cast<std::size_t>(r2) * k + sp2;
                    if (cls[other] >= 0) continue;
                    if (equiv(r, S.members[sp], r2, S.members[sp2])) cls[other] = id;
                }
        }
    ctx.class_index = cls;
    const int n = static_cast<int>(rep_pairs.size());
    auto class_of_pair = [&](Elem r, Elem s_val) {
        auto it = std::lower_bound(S.members.begin(), S.members.end(), s_val);
        return cls[static_cast<std::size_t>(r) * k + static_cast<std::size_t>(it - S.members.begin())];
    };
    std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [r1, s1] = rep_pairs[static_cast<std::size_t>(x)];
            auto [r2, s2] = rep_pairs[static_cast<std::size_t>(y)];
            add[static_cast<std::size_t>(x) * n + y] = class_of_pair(
                R->add_of(R->mul_of(r1, s2), R->mul_of(r2, s1)), R->mul_of(s1, s2));
            mul[static_cast<std::size_t>(x) * n + y] =
                class_of_pair(R->mul_of(r1, r2), R->mul_of(s1, s2));
        }
    const Elem s0 = S.members.front();
    Ring loc = make_ring(n, std::move(add), std::move(mul),
                         class_of_pair(R->zero_elem, s0), class_of_pair(s0, s0),
                         "S^-1" + R->label + ":" + set_to_string(S.members));
    std::vector<Elem> hmap(static_cast<std::size_t>(R->size));
    for (Elem r = 0; r < R->size; ++r)
        hmap[static_cast<std::size_t>(r)] = class_of_pair(R->mul_of(r, s0), s0);
    ctx.ring = loc;
    ctx.hom = RingHom{R, loc, std::move(hmap)};
    return ctx;
}

struct LocalizedModule {
    Module mod;  // S^-1 M over S^-1 R
    // canonical map M -> S^-1 M, m |-> [s0 m / s0]; semilinear along
    // ring_ctx.hom, so it is not a same-ring ModuleHom
    std::vector<Elem> hom_map;
    Localization ring_ctx;
    Module base;
    std::vector<Elem> class_index;  // [mIdx * |S| + sPos] -> class

    Elem cls(Elem m, std::size_t s_pos) const {
        return class_index[static_cast<std::size_t>(m) * ring_ctx.mset.members.size() + s_pos];
    }
    Elem hom_of(Elem m) const { return hom_map[static_cast<std::size_t>(m)]; }
};

/// Additivity plus phi(r.m) = hom(r).phi(m) for the canonical map.
inline std::optional<std::string> localized_hom_violation(const LocalizedModule& ctx) {
    const Module& M = ctx.base;
    for (Elem a = 0; a < M->size; ++a)
        for (Elem b = 0; b < M->size; ++b)
            if (ctx.hom_of(M->add_of(a, b)) != ctx.mod->add_of(ctx.hom_of(a), ctx.hom_of(b)))
                return std::string("canonical map not additive");
    for (Elem r = 0; r < M->ring->size; ++r)
        for (Elem a = 0; a < M->size; ++a)
            if (ctx.hom_of(M->act_of(r, a)) !=
                ctx.mod->act_of(ctx.ring_ctx.hom.of(r), ctx.hom_of(a)))
                return std::string("canonical map not semilinear along R -> S^-1 R");
    return std::nullopt;
}

inline LocalizedModule localize_module(const Module& M, const MultiplicativeSet& S) {
    if (!same_ring(M->ring, S.ring)) throw input_error("localize_module: ring mismatch");
    LocalizedModule out;
    out.ring_ctx = localize(M->ring, S);
    out.base = M;
    const Ring& R = M->ring;
    const std::size_t k = S.members.size();
    const std::size_t total = static_cast<std::size_t>(M->size) * k;
    auto equiv = [&](Elem m1, Elem s1, Elem m2, Elem s2) {
        Elem d = M->sub_of(M->act_of(s2, m1), M->act_of(s1, m2));
        for (Elem u : S.members)
            if (M->act_of(u, d) == M->zero_elem) return true;
        return false;
    };
    std::vector<Elem> cls(total, -1);
    std::vector<std::pair<Elem, Elem>> rep_pairs;
    for (Elem m = 0; m < M->size; ++m)
        for (std::size_t sp = 0; sp < k; ++sp) {
            std::size_t me = static_cast<std::size_t>(m) * k + sp;
            if (cls[me] >= 0) continue;
            Elem id = static_cast<Elem>(rep_pairs.size());
            rep_pairs.emplace_back(m, S.members[sp]);
            cls[me] = id;
            for (Elem m2 = 0; m2 < M->size; ++m2)
                for (std::size_t sp2 = 0; sp2 < k; ++sp2) {
                    std::size_t other = static_cast<std::size_t>(m2) * k + sp2;
                    if (cls[other] >= 0) continue;
                    if (equiv(m, S.members[sp], m2, S.members[sp2])) cls[other] = id;
                }
        }
    out.class_index = cls;
    const int n = static_cast<int>(rep_pairs.size());
    auto class_of_pair = [&](Elem m, Elem s_val) {
        auto it = std::lower_bound(S.members.begin(), S.members.end(), s_val);
        return cls[static_cast<std::size_t>(m) * k + static_cast<std::size_t>(it - S.members.begin())];
    };
    const Ring& L = out.ring_ctx.ring;
    std::vector<Elem> add(static_cast<std::size_t>(n) * n),
        act(static_cast<std::size_t>(L->size) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [m1, s1] = rep_pairs[static_cast<std::size_t>(x)];
            auto [m2, s2] = rep_pairs[static_cast<std::size_t>(y)];
            add[static_cast<std::size_t>(x) * n + y] = class_of_pair(
                M->add_of(M->act_of(s2, m1), M->act_of(s1, m2)), R->mul_of(s1, s2));
        }
    // action of [r/s] on [m/t] = [rm / st]; the ring class representative is
    // a genuine pair of R x S, so this is well-defined
    // find a representative pair for each ring element
    std::vector<std::pair<Elem, Elem>> ring_rep(static_cast<std::size_t>(L->size), {-1, -1});
    for (Elem r = 0; r < R->size; ++r)
        for (std::size_t sp = 0; sp < k; ++sp) {
            Elem c = out.ring_ctx.cls(r, sp);
            if (ring_rep[static_cast<std::size_t>(c)].first < 0)
                ring_rep[static_cast<std::size_t>(c)] = {r, S.members[sp]};
        }
    for (Elem rc = 0; rc < L->size; ++rc) {
        auto [r, s] = ring_rep[static_cast<std::size_t>(rc)];
        for (int x = 0; x < n; ++x) {
            auto [m, t] = rep_pairs[static_cast<std::size_t>(x)];
            act[static_cast<std::size_t>(rc) * n + x] =
                class_of_pair(M->act_of(r, m), R->mul_of(s, t));
        }
    }
    const Elem s0 = S.members.front();
    Module lm = make_module(L, n, std::move(add), std::move(act),
                            class_of_pair(M->zero_elem, s0),
                            "S^-1" + M->label + ":" + set_to_string(S.members));
    std::vector<Elem> hmap(static_cast<std::size_t>(M->size));
    for (Elem m = 0; m < M->size; ++m)
        hmap[static_cast<std::size_t>(m)] = class_of_pair(M->act_of(s0, m), s0);
    out.mod = lm;
    out.hom_map = std::move(hmap);
    return out;
}

/// S^-1 N = { [n/s] : n in N, s in S } inside S^-1 M.
inline Submodule localize_submodule(const LocalizedModule& ctx, const Submodule& N) {
    if (!same_module(N.mod, ctx.base)) throw input_error("localize_submodule: module mismatch");
    ElemSet out;
    for (Elem n : N.members)
        for (std::size_t sp = 0; sp < ctx.ring_ctx.mset.members.size(); ++sp)
            out.push_back(ctx.cls(n, sp));
    return Submodule{ctx.mod, sorted_unique(std::move(out))};
}

}  // namespace absorb
