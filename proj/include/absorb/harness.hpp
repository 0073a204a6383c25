#pragma once

/**
 * @file harness.hpp
 * @brief Corpus generation and theorem-by-theorem verification.
 *
 * Every result of the theory is mapped to a theorem id. verify_theorems
 * evaluates each id on one compiled instance and reports verified / refuted /
 * inapplicable (with the failed gate named). A refuted report carries the
 * instance recipe and the raw elements involved, so it replays from the
 * serialized evidence alone with fresh caches.
 */

#include <chrono>
#include <thread>

#include "absorb/instance.hpp"

namespace absorb {

struct HarnessBounds {
    int max_ring_size = 12;
    int max_module_size = 32;
    int construction_depth = 1;
    // caps for derived objects built inside transfer-theorem checks
    int max_derived_ring = 128;
    int max_derived_module = 64;
    // avoidance scan limits
    int max_cover_n = 4;
    int avoidance_module_cap = 16;
};

inline json bounds_to_json(const HarnessBounds& b) {
    json j;
    j["max_ring_size"] = b.max_ring_size;
    j["max_module_size"] = b.max_module_size;
    j["construction_depth"] = b.construction_depth;
    return j;
}

enum class TheoremStatus { verified, refuted, inapplicable };

inline const char* to_string(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::verified: return "verified";
        case TheoremStatus::refuted: return "refuted";
        case TheoremStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

struct TheoremReport {
    std::string theorem_id;
    std::string instance_id;
    TheoremStatus status = TheoremStatus::inapplicable;
    json evidence;  // witnesses / counterexample payload / failed gate
    double elapsed_ms = 0.0;
};

// ---------------------------------------------------------------------------
// Corpus generation
// ---------------------------------------------------------------------------

namespace corpus_detail {

inline RingRecipePtr rr_zn(int n) {
    auto r = std::make_shared<RingRecipe>();
    r->kind = "zn";
    r->n = n;
    return r;
}

inline ModuleRecipePtr mr(const std::string& kind) {
    auto m = std::make_shared<ModuleRecipe>();
    m->kind = kind;
    return m;
}

inline std::string members_tag(const ElemSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ".";
        out += std::to_string(s[i]);
    }
    return out;
}

inline std::string ring_tag(const RingRecipe& r) {
    if (r.kind == "zn") return "zn" + std::to_string(r.n);
    if (r.kind == "product") {
        std::string out = "p[";
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
            if (i) out += ",";
            out += ring_tag(*r.factors[i]);
        }
        return out + "]";
    }
    if (r.kind == "idealization") return "idl[" + ring_tag(*r.ring) + "]";
    if (r.kind == "duplication")
        return "dup[" + ring_tag(*r.ring) + ";" + members_tag(r.ideal) + "]";
    if (r.kind == "amalgamation")
        return "am[" + ring_tag(*r.ring) + "," + ring_tag(*r.b) + ";" + members_tag(r.ideal) + "]";
    if (r.kind == "quotient") return "q[" + ring_tag(*r.ring) + ";" + members_tag(r.ideal) + "]";
    if (r.kind == "localization")
        return "loc[" + ring_tag(*r.ring) + ";" + members_tag(r.multset) + "]";
    return "tbl" + std::to_string(r.size);
}

inline std::string module_tag(const ModuleRecipe& m) {
    if (m.kind == "ring") return "self";
    if (m.kind == "quotient") return "q" + members_tag(m.ideal);
    if (m.kind == "product" || m.kind == "componentwise") {
        std::string out = m.kind == "product" ? "pm[" : "cw[";
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            if (i) out += ",";
            out += module_tag(*m.factors[i]);
        }
        return out + "]";
    }
    if (m.kind == "duplication") return "dupm[" + module_tag(*m.base) + "]";
    return "tbl" + std::to_string(m.size);
}

/// distinct multiplicative sets: every single-element closure of size <= 4,
/// plus the unit group (which always contains {1} as a closure)
inline std::vector<ElemSet> multset_menu(const Ring& R) {
    std::vector<ElemSet> out;
    auto push = [&](ElemSet s) {
        for (const auto& have : out)
            if (have == s) return;
        out.push_back(std::move(s));
    };
    for (Elem g = 0; g < R->size; ++g) {
        auto S = multset_generate(R, {g});
        if (S.members.size() <= 4) push(S.members);
    }
    push(R->unit_set);
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace corpus_detail

/**
 * Deterministic corpus: Z_n bases, products of up to three factors, one
 * construction level of idealization / duplication / amalgamation, all
 * proper ideals and submodules as targets, single-generator multiplicative
 * sets of size <= 4 plus the unit group. Identical bounds produce an
 * identical corpus.
 */
inline std::vector<InstanceSpec> generate_corpus(const HarnessBounds& bounds) {
    using namespace corpus_detail;
    if (bounds.max_ring_size < 1 || bounds.max_module_size < 1)
        throw input_error("generate_corpus: bounds must be positive");

    std::vector<RingRecipePtr> rings;
    for (int n = 1; n <= bounds.max_ring_size; ++n) rings.push_back(rr_zn(n));
    for (int a = 2; a * 2 <= bounds.max_ring_size; ++a)
        for (int b = a; a * b <= bounds.max_ring_size; ++b) {
            auto r = std::make_shared<RingRecipe>();
            r->kind = "product";
            r->factors = {rr_zn(a), rr_zn(b)};
            rings.push_back(r);
        }
    for (int a = 2; a * 4 <= bounds.max_ring_size; ++a)
        for (int b = a; a * b * 2 <= bounds.max_ring_size; ++b)
            for (int c = b; a * b * c <= bounds.max_ring_size; ++c) {
                auto r = std::make_shared<RingRecipe>();
                r->kind = "product";
                r->factors = {rr_zn(a), rr_zn(b), rr_zn(c)};
                rings.push_back(r);
            }
    if (bounds.construction_depth >= 1) {
        // idealizations Z_a (+) Z_b for b | a
        for (int a = 2; a <= bounds.max_ring_size; ++a)
            for (int b = 2; b <= a; ++b) {
                if (a % b != 0 || a * b > bounds.max_ring_size) continue;
                auto r = std::make_shared<RingRecipe>();
                r->kind = "idealization";
                r->ring = rr_zn(a);
                if (b == a) {
                    r->module = mr("ring");
                } else {
                    r->module = mr("quotient");
                    for (int e = 0; e < a; e += b) r->module->ideal.push_back(e);
                }
                rings.push_back(r);
            }
        // Z_2 (+) (Z_2 x Z_2), the smallest non-cyclic idealization
        if (2 * 4 <= bounds.max_ring_size) {
            auto r = std::make_shared<RingRecipe>();
            r->kind = "idealization";
            r->ring = rr_zn(2);
            r->module = mr("product");
            r->module->factors = {mr("ring"), mr("ring")};
            rings.push_back(r);
        }
        // duplications Z_n |><| dZ_n along proper nonzero ideals
        for (int n = 2; n <= bounds.max_ring_size; ++n)
            for (int d = 2; d < n; ++d) {
                if (n % d != 0) continue;
                int isz = n / d;
                if (n * isz > bounds.max_ring_size) continue;
                auto r = std::make_shared<RingRecipe>();
                r->kind = "duplication";
                r->ring = rr_zn(n);
                for (int e = 0; e < n; e += d) r->ideal.push_back(e);
                rings.push_back(r);
            }
        // amalgamations Z_a ->(mod b) Z_b along nonzero ideals of Z_b
        for (int a = 4; a <= bounds.max_ring_size; ++a)
            for (int b = 2; b < a; ++b) {
                if (a % b != 0) continue;
                for (int d = 1; d < b; ++d) {
                    if (b % d != 0) continue;  // J = dZ_b, nonzero (d=b excluded)
                    int jsz = b / d;
                    if (a * jsz > bounds.max_ring_size) continue;
                    auto r = std::make_shared<RingRecipe>();
                    r->kind = "amalgamation";
                    r->ring = rr_zn(a);
                    r->b = rr_zn(b);
                    for (int x = 0; x < a; ++x) r->hom.push_back(x % b);
                    for (int e = 0; e < b; e += d) r->ideal.push_back(e);
                    rings.push_back(r);
                }
            }
    }

    std::vector<InstanceSpec> out;
    for (const auto& rr : rings) {
        Ring R = compile_ring_recipe(*rr, nullptr, "corpus");
        if (R->size > bounds.max_ring_size) continue;
        const std::string rtag = ring_tag(*rr);
        auto menu = multset_menu(R);

        // ring-level instances: every proper ideal against every menu set
        auto ring_ideals_all = proper_ideals(R);
        if (ring_ideals_all.empty()) {
            // zero ring: no selectable target, but the instance itself exists
            InstanceSpec s;
            s.ring = rr;
            s.tags = {"ring", "degenerate"};
            s.id = rtag + "/bare";
            out.push_back(std::move(s));
        }
        for (const auto& I : ring_ideals_all) {
            for (std::size_t si = 0; si < menu.size(); ++si) {
                InstanceSpec s;
                s.ring = rr;
                s.target = TargetSpec{"ideal", I.members};
                s.multset = menu[si];
                s.tags = {"ring"};
                s.id = rtag + "/ideal/N" + members_tag(I.members) + "/S" + members_tag(menu[si]);
                out.push_back(std::move(s));
            }
        }

        // module menu
        std::vector<ModuleRecipePtr> mods;
        mods.push_back(mr("ring"));
        std::vector<Ideal> ring_ideals = proper_ideals(R);
        for (const auto& I : ring_ideals) {
            if (I.members.size() < 2) continue;  // skip R/0 = R, already present
            if (R->size - static_cast<int>(I.members.size()) < 1) continue;
            auto m = mr("quotient");
            m->ideal = I.members;
            mods.push_back(m);
        }
        // products of two cyclic quotients, smallest first, at most four
        {
            std::vector<ModuleRecipePtr> cyclics;
            cyclics.push_back(mr("ring"));
            for (const auto& I : ring_ideals)
                if (I.members.size() >= 2) {
                    auto m = mr("quotient");
                    m->ideal = I.members;
                    cyclics.push_back(m);
                }
            int added = 0;
            for (std::size_t i = 0; i < cyclics.size() && added < 4; ++i)
                for (std::size_t j = i; j < cyclics.size() && added < 4; ++j) {
                    auto m = mr("product");
                    m->factors = {cyclics[i], cyclics[j]};
                    // size check happens after compilation below
                    mods.push_back(m);
                    ++added;
                }
        }
        if (rr->kind == "product" && rr->factors.size() == 2) {
            auto m = mr("componentwise");
            m->factors = {mr("ring"), mr("ring")};
            mods.push_back(m);
        }
        if (rr->kind == "duplication") {
            auto m = mr("duplication");
            m->base = mr("ring");
            m->ideal = rr->ideal;
            mods.push_back(m);
        }

        for (const auto& mrp : mods) {
            InstanceSpec probe;
            probe.ring = rr;
            probe.module = mrp;
            CompiledInstance ci;
            try {
                ci = compile(probe);
            } catch (const input_error&) {
                continue;
            }
            if (ci.module->size > bounds.max_module_size) continue;
            const std::string mtag = module_tag(*mrp);
            for (const auto& N : proper_submodules(ci.module)) {
                for (std::size_t si = 0; si < menu.size(); ++si) {
                    InstanceSpec s;
                    s.ring = rr;
                    s.module = mrp;
                    s.target = TargetSpec{"submodule", N.members};
                    s.multset = menu[si];
                    s.tags = {"module"};
                    s.id = rtag + "/" + mtag + "/N" + members_tag(N.members) + "/S" +
                           members_tag(menu[si]);
                    out.push_back(std::move(s));
                }
            }
        }
    }

    // duplicate ids would poison downstream joins
    std::map<std::string, int> seen;
    for (const auto& s : out)
        if (++seen[s.id] > 1) throw std::logic_error("generate_corpus: duplicate id " + s.id);
    return out;
}

// ---------------------------------------------------------------------------
// Per-instance evaluator with memoized predicate reports
// ---------------------------------------------------------------------------

class Evaluator {
  public:
    const CompiledInstance& inst;
    const HarnessBounds& bounds;

    Evaluator(const CompiledInstance& i, const HarnessBounds& b) : inst(i), bounds(b) {}

    PredicateReport ideal_pred(const Ring& R, const Ideal& I,
                               const std::optional<MultiplicativeSet>& S, IdealPredicate p) {
        Key k{R.get(), I.members, S ? S->members : ElemSet{-1}, 0, static_cast<int>(p)};
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        PredicateReport rep;
        if (!I.is_proper() || R->is_zero_ring()) {
            rep.predicate = to_string(p);
            rep.notes = I.is_proper() ? "zero ring" : "improper ideal";
        } else {
            rep = check_ideal_predicate(R, I, S, p);
        }
        memo_.emplace(std::move(k), rep);
        return rep;
    }

    PredicateReport sub_pred(const Module& M, const Submodule& N,
                             const std::optional<MultiplicativeSet>& S, SubmodulePredicate p) {
        Key k{M.get(), N.members, S ? S->members : ElemSet{-1}, 1, static_cast<int>(p)};
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        PredicateReport rep;
        if (!N.is_proper() || M->is_zero_module() || M->ring->is_zero_ring()) {
            rep.predicate = to_string(p);
            rep.notes = N.is_proper() ? "degenerate module" : "improper submodule";
        } else {
            rep = check_submodule_predicate(M, N, S, p);
        }
        memo_.emplace(std::move(k), rep);
        return rep;
    }

    const StructureFlags& flags(const Module& M) {
        auto it = flags_.find(M.get());
        if (it != flags_.end()) return it->second;
        return flags_.emplace(M.get(), structure_flags(M)).first->second;
    }

    /// R viewed as a module over itself (for ring-level instances)
    const Module& ring_module() {
        if (!ring_module_) ring_module_ = ring_as_module(inst.ring);
        return ring_module_;
    }

    /// idealization R(+)M for the instance module (or R(+)R), size-capped
    const std::optional<Idealization>& ideal_ctx() {
        if (!ideal_ctx_done_) {
            ideal_ctx_done_ = true;
            Module M = inst.module ? inst.module : ring_module();
            if (static_cast<long long>(inst.ring->size) * M->size <= bounds.max_derived_ring)
                ideal_ctx_ = idealization(inst.ring, M);
        }
        return ideal_ctx_;
    }

  private:
    using Key = std::tuple<const void*, ElemSet, ElemSet, int, int>;
    std::map<Key, PredicateReport> memo_;
    std::map<const void*, StructureFlags> flags_;
    Module ring_module_;
    bool ideal_ctx_done_ = false;
    std::optional<Idealization> ideal_ctx_;
};

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

namespace harness_detail {

inline TheoremReport make_report(const std::string& id, const std::string& inst_id,
                                 TheoremStatus st, json evidence) {
    TheoremReport r;
    r.theorem_id = id;
    r.instance_id = inst_id;
    r.status = st;
    r.evidence = std::move(evidence);
    return r;
}

inline json gate_evidence(const std::string& why) { return json{{"gate", why}}; }

/// refuted evidence embeds the instance spec so the report replays alone
inline json refutation_evidence(const CompiledInstance& inst, json detail) {
    json j;
    j["instance"] = instance_to_json(inst.spec);
    j["detail"] = std::move(detail);
    return j;
}

inline bool s_times_subset_in_ideal(const Ring& R, Elem s, const ElemSet& xs, const Ideal& tgt) {
    for (Elem x : xs)
        if (!tgt.contains(R->mul_of(s, x))) return false;
    return true;
}

inline bool s_times_members_in_set(const Module& M, Elem s, const ElemSet& xs,
                                   const ElemSet& tgt) {
    for (Elem x : xs)
        if (!set_contains(tgt, M->act_of(s, x))) return false;
    return true;
}

struct AmalTarget {
    Ring b;
    RingHom f;
    Ideal j;
    std::string label;
};

/// deterministic small family of (B, f, J) targets for the amalgamation ids
inline std::vector<AmalTarget> amal_targets(const CompiledInstance& inst,
                                            const HarnessBounds& bounds) {
    std::vector<AmalTarget> out;
    const Ring& A = inst.ring;
    auto push_id_target = [&](const Ideal& J, const std::string& lbl) {
        if (static_cast<long long>(A->size) * J.members.size() > bounds.max_derived_ring) return;
        out.push_back(AmalTarget{A, identity_hom(A), J, lbl});
    };
    auto ideals = enumerate_ideals(A);
    for (const auto& J : ideals)
        if (J.members.size() >= 2 && J.is_proper()) {
            push_id_target(J, "id/J=" + set_to_string(J.members));
            break;  // first nonzero proper ideal
        }
    push_id_target(Ideal{A, full_set(A->size)}, "id/J=A");
    if (inst.spec.ring && inst.spec.ring->kind == "zn") {
        int n = inst.spec.ring->n;
        for (int b = n / 2; b >= 2; --b) {
            if (n % b != 0) continue;
            Ring B = build_zn(b);
            std::vector<Elem> map;
            for (int x = 0; x < n; ++x) map.push_back(x % b);
            RingHom f{A, B, std::move(map)};
            Ideal J{B, full_set(b)};
            if (static_cast<long long>(A->size) * b <= bounds.max_derived_ring)
                out.push_back(AmalTarget{B, f, J, "mod" + std::to_string(b) + "/J=B"});
            break;  // largest proper divisor only
        }
    }
    return out;
}

}  // namespace harness_detail

/// Theorem ids shipped with the default suite.
inline std::vector<std::string> all_theorem_ids() {
    return {
        "axioms",      "hierarchy",  "lrad",          "mrad_sprime", "tq",
        "cq",          "tq_mod",     "char",          "char1",       "n1n2n3",
        "char2",       "sprimary_s1abs", "sprimary_s1abs_mod", "saturation", "p1",
        "intersection", "homs",      "quotient_corr", "lemma_d",     "mrad_lemma",
        "prop_ns",     "cor1",       "prod_ring",     "prod_mod",    "localization",
        "ideal_units", "ideal_rad",  "id1",           "id2",         "amal1",
        "amal",        "amal2",      "bar",           "dup1",        "dup2",
        "dup3",        "dup_final",  "avoidance",
    };
}

inline TheoremReport verify_one_theorem(Evaluator& ev, const std::string& id);

/// Run a suite of theorem ids against one compiled instance.
inline std::vector<TheoremReport> verify_theorems(const CompiledInstance& inst,
                                                  const std::vector<std::string>& suite,
                                                  const HarnessBounds& bounds) {
    auto known = all_theorem_ids();
    for (const auto& id : suite)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw input_error("verify_theorems: unknown theorem id '" + id + "'");
    Evaluator ev(inst, bounds);
    std::vector<TheoremReport> out;
    for (const auto& id : suite) {
        auto t0 = std::chrono::steady_clock::now();
        TheoremReport rep = verify_one_theorem(ev, id);
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace absorb

#include "absorb/harness_theorems.hpp"
#include "absorb/harness_run.hpp"
