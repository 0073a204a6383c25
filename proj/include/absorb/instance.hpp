#pragma once

/**
 * @file instance.hpp
 * @brief Serializable instance specs: construction recipes for rings and
 *        modules plus target/multiplicative-set selectors, with a strict
 *        versioned JSON schema.
 *
 * Element sets serialize as ascending index arrays, tables as row-major
 * arrays. Unknown fields are rejected. parse(serialize(spec)) == spec.
 */

#include <json.hpp>

#include "absorb/constructions.hpp"

namespace absorb {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Recipes
// ---------------------------------------------------------------------------

struct ModuleRecipe;
using ModuleRecipePtr = std::shared_ptr<ModuleRecipe>;

struct RingRecipe;
using RingRecipePtr = std::shared_ptr<RingRecipe>;

struct RingRecipe {
    std::string kind;  // zn|table|product|idealization|amalgamation|duplication|localization|quotient
    int n = 0;                             // zn
    int size = 0;                          // table
    std::vector<Elem> add, mul;            // table
    Elem zero = 0, one = 0;                // table
    std::string label;                     // table
    std::vector<RingRecipePtr> factors;    // product
    RingRecipePtr ring;                    // base ring / amalgamation "a"
    RingRecipePtr b;                       // amalgamation
    std::vector<Elem> hom;                 // amalgamation f: a -> b
    ElemSet ideal;                         // duplication/quotient/amalgamation j
    ElemSet multset;                       // localization
    ModuleRecipePtr module;                // idealization
};

struct ModuleRecipe {
    std::string kind;  // ring|quotient|table|product|componentwise|duplication
    ElemSet ideal;                         // quotient, duplication
    int size = 0;                          // table
    std::vector<Elem> add, act;            // table
    Elem zero = 0;                         // table
    std::string label;                     // table
    std::vector<ModuleRecipePtr> factors;  // product / componentwise
    ModuleRecipePtr base;                  // duplication
};

struct TargetSpec {
    std::string kind;  // ideal | submodule
    ElemSet members;
    bool operator==(const TargetSpec&) const = default;
};

struct InstanceSpec {
    std::string id;
    std::vector<std::string> tags;
    RingRecipePtr ring;
    ModuleRecipePtr module;             // optional
    std::optional<TargetSpec> target;   // optional
    std::optional<ElemSet> multset;     // optional
};

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

inline void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw input_error(where + ": expected a JSON object");
}

inline void check_keys(const json& j, const std::vector<std::string>& required,
                       const std::vector<std::string>& optional, const std::string& where) {
    expect_object(j, where);
    for (const auto& k : required)
        if (!j.contains(k)) throw input_error(where + ": missing field '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw input_error(where + ": unknown field '" + k + "' (strict schema)");
    }
}

inline ElemSet elemset_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of element indices");
    ElemSet out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw input_error(where + ": non-integer element index");
        out.push_back(v.get<Elem>());
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw input_error(where + ": element indices must be strictly ascending");
    return out;
}

inline std::vector<Elem> elemvec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array");
    std::vector<Elem> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw input_error(where + ": non-integer entry");
        out.push_back(v.get<Elem>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recipe <-> JSON
// ---------------------------------------------------------------------------

inline json module_recipe_to_json(const ModuleRecipe& m);

inline json ring_recipe_to_json(const RingRecipe& r) {
    json j;
    j["kind"] = r.kind;
    if (r.kind == "zn") {
        j["n"] = r.n;
    } else if (r.kind == "table") {
        j["size"] = r.size;
        j["add"] = r.add;
        j["mul"] = r.mul;
        j["zero"] = r.zero;
        j["one"] = r.one;
        if (!r.label.empty()) j["label"] = r.label;
    } else if (r.kind == "product") {
        json fs = json::array();
        for (const auto& f : r.factors) fs.push_back(ring_recipe_to_json(*f));
        j["factors"] = fs;
    } else if (r.kind == "idealization") {
        j["ring"] = ring_recipe_to_json(*r.ring);
        j["module"] = module_recipe_to_json(*r.module);
    } else if (r.kind == "amalgamation") {
        j["a"] = ring_recipe_to_json(*r.ring);
        j["b"] = ring_recipe_to_json(*r.b);
        j["hom"] = r.hom;
        j["j"] = r.ideal;
    } else if (r.kind == "duplication") {
        j["ring"] = ring_recipe_to_json(*r.ring);
        j["ideal"] = r.ideal;
    } else if (r.kind == "localization") {
        j["ring"] = ring_recipe_to_json(*r.ring);
        j["multset"] = r.multset;
    } else if (r.kind == "quotient") {
        j["ring"] = ring_recipe_to_json(*r.ring);
        j["ideal"] = r.ideal;
    } else {
        throw std::logic_error("ring_recipe_to_json: unknown kind " + r.kind);
    }
    return j;
}

inline json module_recipe_to_json(const ModuleRecipe& m) {
    json j;
    j["kind"] = m.kind;
    if (m.kind == "ring") {
    } else if (m.kind == "quotient") {
        j["ideal"] = m.ideal;
    } else if (m.kind == "table") {
        j["size"] = m.size;
        j["add"] = m.add;
        j["action"] = m.act;
        j["zero"] = m.zero;
        if (!m.label.empty()) j["label"] = m.label;
    } else if (m.kind == "product" || m.kind == "componentwise") {
        json fs = json::array();
        for (const auto& f : m.factors) fs.push_back(module_recipe_to_json(*f));
        j["factors"] = fs;
    } else if (m.kind == "duplication") {
        j["module"] = module_recipe_to_json(*m.base);
        j["ideal"] = m.ideal;
    } else {
        throw std::logic_error("module_recipe_to_json: unknown kind " + m.kind);
    }
    return j;
}

inline ModuleRecipePtr module_recipe_from_json(const json& j, const std::string& where);

inline RingRecipePtr ring_recipe_from_json(const json& j, const std::string& where) {
    expect_object(j, where);
    if (!j.contains("kind")) throw input_error(where + ": missing 'kind'");
    auto r = std::make_shared<RingRecipe>();
    r->kind = j.at("kind").get<std::string>();
    if (r->kind == "zn") {
        check_keys(j, {"kind", "n"}, {}, where);
        r->n = j.at("n").get<int>();
        if (r->n < 1) throw input_error(where + ": zn requires n >= 1");
    } else if (r->kind == "table") {
        check_keys(j, {"kind", "size", "add", "mul", "zero", "one"}, {"label"}, where);
        r->size = j.at("size").get<int>();
        r->add = elemvec_from_json(j.at("add"), where + ".add");
        r->mul = elemvec_from_json(j.at("mul"), where + ".mul");
        r->zero = j.at("zero").get<Elem>();
        r->one = j.at("one").get<Elem>();
        if (j.contains("label")) r->label = j.at("label").get<std::string>();
    } else if (r->kind == "product") {
        check_keys(j, {"kind", "factors"}, {}, where);
        if (!j.at("factors").is_array() || j.at("factors").empty())
            throw input_error(where + ": product needs a nonempty factor array");
        int idx = 0;
        for (const auto& f : j.at("factors"))
            r->factors.push_back(
                ring_recipe_from_json(f, where + ".factors[" + std::to_string(idx++) + "]"));
    } else if (r->kind == "idealization") {
        check_keys(j, {"kind", "ring", "module"}, {}, where);
        r->ring = ring_recipe_from_json(j.at("ring"), where + ".ring");
        r->module = module_recipe_from_json(j.at("module"), where + ".module");
    } else if (r->kind == "amalgamation") {
        check_keys(j, {"kind", "a", "b", "hom", "j"}, {}, where);
        r->ring = ring_recipe_from_json(j.at("a"), where + ".a");
        r->b = ring_recipe_from_json(j.at("b"), where + ".b");
        r->hom = elemvec_from_json(j.at("hom"), where + ".hom");
        r->ideal = elemset_from_json(j.at("j"), where + ".j");
    } else if (r->kind == "duplication") {
        check_keys(j, {"kind", "ring", "ideal"}, {}, where);
        r->ring = ring_recipe_from_json(j.at("ring"), where + ".ring");
        r->ideal = elemset_from_json(j.at("ideal"), where + ".ideal");
    } else if (r->kind == "localization") {
        check_keys(j, {"kind", "ring", "multset"}, {}, where);
        r->ring = ring_recipe_from_json(j.at("ring"), where + ".ring");
        r->multset = elemset_from_json(j.at("multset"), where + ".multset");
    } else if (r->kind == "quotient") {
        check_keys(j, {"kind", "ring", "ideal"}, {}, where);
        r->ring = ring_recipe_from_json(j.at("ring"), where + ".ring");
        r->ideal = elemset_from_json(j.at("ideal"), where + ".ideal");
    } else {
        throw input_error(where + ": unknown ring recipe kind '" + r->kind + "'");
    }
    return r;
}

inline ModuleRecipePtr module_recipe_from_json(const json& j, const std::string& where) {
    expect_object(j, where);
    if (!j.contains("kind")) throw input_error(where + ": missing 'kind'");
    auto m = std::make_shared<ModuleRecipe>();
    m->kind = j.at("kind").get<std::string>();
    if (m->kind == "ring") {
        check_keys(j, {"kind"}, {}, where);
    } else if (m->kind == "quotient") {
        check_keys(j, {"kind", "ideal"}, {}, where);
        m->ideal = elemset_from_json(j.at("ideal"), where + ".ideal");
    } else if (m->kind == "table") {
        check_keys(j, {"kind", "size", "add", "action", "zero"}, {"label"}, where);
        m->size = j.at("size").get<int>();
        m->add = elemvec_from_json(j.at("add"), where + ".add");
        m->act = elemvec_from_json(j.at("action"), where + ".action");
        m->zero = j.at("zero").get<Elem>();
        if (j.contains("label")) m->label = j.at("label").get<std::string>();
    } else if (m->kind == "product" || m->kind == "componentwise") {
        check_keys(j, {"kind", "factors"}, {}, where);
        if (!j.at("factors").is_array() || j.at("factors").size() < 2)
            throw input_error(where + ": " + m->kind + " needs at least two factors");
        int idx = 0;
        for (const auto& f : j.at("factors"))
            m->factors.push_back(
                module_recipe_from_json(f, where + ".factors[" + std::to_string(idx++) + "]"));
    } else if (m->kind == "duplication") {
        check_keys(j, {"kind", "module", "ideal"}, {}, where);
        m->base = module_recipe_from_json(j.at("module"), where + ".module");
        m->ideal = elemset_from_json(j.at("ideal"), where + ".ideal");
    } else {
        throw input_error(where + ": unknown module recipe kind '" + m->kind + "'");
    }
    return m;
}

// ---------------------------------------------------------------------------
// InstanceSpec <-> JSON
// ---------------------------------------------------------------------------

inline json instance_to_json(const InstanceSpec& s) {
    json j;
    if (!s.id.empty()) j["id"] = s.id;
    if (!s.tags.empty()) j["tags"] = s.tags;
    j["ring"] = ring_recipe_to_json(*s.ring);
    if (s.module) j["module"] = module_recipe_to_json(*s.module);
    if (s.target) {
        json t;
        t["kind"] = s.target->kind;
        t["members"] = s.target->members;
        j["target"] = t;
    }
    if (s.multset) j["multset"] = json{{"members", *s.multset}};
    return j;
}

inline InstanceSpec parse_instance(const json& j, const std::string& where = "instance") {
    check_keys(j, {"ring"}, {"id", "tags", "module", "target", "multset"}, where);
    InstanceSpec s;
    if (j.contains("id")) s.id = j.at("id").get<std::string>();
    if (j.contains("tags"))
        for (const auto& t : j.at("tags")) s.tags.push_back(t.get<std::string>());
    s.ring = ring_recipe_from_json(j.at("ring"), where + ".ring");
    if (j.contains("module")) s.module = module_recipe_from_json(j.at("module"), where + ".module");
    if (j.contains("target")) {
        check_keys(j.at("target"), {"kind", "members"}, {}, where + ".target");
        TargetSpec t;
        t.kind = j.at("target").at("kind").get<std::string>();
        if (t.kind != "ideal" && t.kind != "submodule")
            throw input_error(where + ".target: kind must be 'ideal' or 'submodule'");
        t.members = elemset_from_json(j.at("target").at("members"), where + ".target.members");
        s.target = std::move(t);
    }
    if (j.contains("multset")) {
        check_keys(j.at("multset"), {"members"}, {}, where + ".multset");
        s.multset = elemset_from_json(j.at("multset").at("members"), where + ".multset.members");
    }
    return s;
}

// ---------------------------------------------------------------------------
// Compilation
// ---------------------------------------------------------------------------

struct CompiledInstance {
    InstanceSpec spec;
    Ring ring;
    std::optional<ProductRing> product;     // factor structure when the ring is a product
    Module module;                          // null when the instance is ring-level
    std::vector<Module> comp_factors;       // componentwise module factors
    std::optional<Ideal> ideal;             // target, ideal view
    std::optional<Submodule> submodule;     // target, submodule view
    std::optional<MultiplicativeSet> multset;
};

inline Module compile_module_recipe(const ModuleRecipe& m, const Ring& R,
                                    std::vector<Module>* comp_out, const std::string& where);

inline Ring compile_ring_recipe(const RingRecipe& r, std::optional<ProductRing>* product_out,
                                const std::string& where) {
    if (r.kind == "zn") return build_zn(r.n);
    if (r.kind == "table") {
        Ring R = make_ring(r.size, r.add, r.mul, r.zero, r.one,
                           r.label.empty() ? "table" + std::to_string(r.size) : r.label);
        if (auto why = check_ring_axioms(R)) throw input_error(where + ": " + *why);
        return R;
    }
    if (r.kind == "product") {
        std::vector<Ring> factors;
        for (const auto& f : r.factors) factors.push_back(compile_ring_recipe(*f, nullptr, where));
        auto ctx = product_ring(std::move(factors));
        if (product_out) *product_out = ctx;
        return ctx.ring;
    }
    if (r.kind == "idealization") {
        Ring base = compile_ring_recipe(*r.ring, nullptr, where + ".ring");
        Module M = compile_module_recipe(*r.module, base, nullptr, where + ".module");
        return idealization(base, M).ring;
    }
    if (r.kind == "amalgamation") {
        Ring A = compile_ring_recipe(*r.ring, nullptr, where + ".a");
        Ring B = compile_ring_recipe(*r.b, nullptr, where + ".b");
        RingHom f = make_ring_hom(A, B, r.hom);
        Ideal J = make_ideal(B, r.ideal);
        return amalgamation(A, B, f, J).ring;
    }
    if (r.kind == "duplication") {
        Ring base = compile_ring_recipe(*r.ring, nullptr, where + ".ring");
        return duplication_ring(base, make_ideal(base, r.ideal)).ring;
    }
    if (r.kind == "localization") {
        Ring base = compile_ring_recipe(*r.ring, nullptr, where + ".ring");
        return localize(base, make_multset(base, r.multset)).ring;
    }
    if (r.kind == "quotient") {
        Ring base = compile_ring_recipe(*r.ring, nullptr, where + ".ring");
        return quotient_ring(base, make_ideal(base, r.ideal)).first;
    }
    throw input_error(where + ": unknown ring recipe kind '" + r.kind + "'");
}

inline Module compile_module_recipe(const ModuleRecipe& m, const Ring& R,
                                    std::vector<Module>* comp_out, const std::string& where) {
    if (m.kind == "ring") return ring_as_module(R);
    if (m.kind == "quotient") return quotient_ring_as_module(R, make_ideal(R, m.ideal));
    if (m.kind == "table") {
        Module M = make_module(R, m.size, m.add, m.act, m.zero,
                               m.label.empty() ? "table" + std::to_string(m.size) : m.label);
        if (auto why = check_module_axioms(M)) throw input_error(where + ": " + *why);
        return M;
    }
    if (m.kind == "product") {
        Module acc = compile_module_recipe(*m.factors[0], R, nullptr, where);
        for (std::size_t i = 1; i < m.factors.size(); ++i)
            acc = product_module(acc, compile_module_recipe(*m.factors[i], R, nullptr, where));
        return acc;
    }
    throw input_error(where + ": module recipe kind '" + m.kind +
                      "' is not valid in this position");
}

/// Compile a full instance spec; throws input_error with a diagnostic path on
/// any schema or closure violation.
inline CompiledInstance compile(const InstanceSpec& spec) {
    CompiledInstance out;
    out.spec = spec;
    const std::string where = spec.id.empty() ? std::string("instance") : spec.id;
    if (!spec.ring) throw input_error(where + ": missing ring recipe");

    // componentwise and duplication modules constrain the ring recipe shape,
    // so the module compilation can drive the ring compilation
    if (spec.module && spec.module->kind == "componentwise") {
        if (spec.ring->kind != "product" ||
            spec.ring->factors.size() != spec.module->factors.size())
            throw input_error(where +
                              ": componentwise module requires a product ring of equal arity");
        std::optional<ProductRing> prod;
        out.ring = compile_ring_recipe(*spec.ring, &prod, where + ".ring");
        out.product = prod;
        std::vector<Module> mods;
        for (std::size_t i = 0; i < spec.module->factors.size(); ++i)
            mods.push_back(compile_module_recipe(*spec.module->factors[i], prod->factors[i],
                                                 nullptr,
                                                 where + ".module.factors[" + std::to_string(i) +
                                                     "]"));
        out.comp_factors = mods;
        out.module = componentwise_module(*prod, mods);
    } else if (spec.module && spec.module->kind == "duplication") {
        if (spec.ring->kind != "duplication" || spec.ring->ideal != spec.module->ideal)
            throw input_error(where +
                              ": duplication module requires the duplication ring along the "
                              "same ideal");
        Ring base = compile_ring_recipe(*spec.ring->ring, nullptr, where + ".ring.ring");
        Module baseM = compile_module_recipe(*spec.module->base, base, nullptr,
                                             where + ".module.module");
        auto dup = duplication_module(baseM, make_ideal(base, spec.module->ideal));
        out.ring = dup.ring_ctx.ring;
        out.module = dup.mod;
    } else {
        std::optional<ProductRing> prod;
        out.ring = compile_ring_recipe(*spec.ring, &prod, where + ".ring");
        out.product = prod;
        if (spec.module)
            out.module = compile_module_recipe(*spec.module, out.ring, nullptr, where + ".module");
    }

    if (spec.target) {
        if (spec.target->kind == "ideal") {
            if (auto why = ideal_violation(out.ring, spec.target->members))
                throw input_error(where + ".target: not an ideal: " + *why);
            out.ideal = Ideal{out.ring, spec.target->members};
        } else {
            if (!out.module)
                throw input_error(where + ".target: submodule target requires a module");
            if (auto why = submodule_violation(out.module, spec.target->members))
                throw input_error(where + ".target: not a submodule: " + *why);
            out.submodule = Submodule{out.module, spec.target->members};
        }
    }
    if (spec.multset) {
        if (auto why = multset_violation(out.ring, *spec.multset))
            throw input_error(where + ".multset: " + *why);
        out.multset = MultiplicativeSet{out.ring, *spec.multset};
    }
    return out;
}

}  // namespace absorb
