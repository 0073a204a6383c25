#include <catch2/catch_amalgamated.hpp>

#include "absorb/instance.hpp"

using namespace absorb;

TEST_CASE("minimal spec parses") {
    auto j = json::parse(R"({"ring":{"kind":"zn","n":6}})");
    auto spec = parse_instance(j);
    auto c = compile(spec);
    CHECK(c.ring->size == 6);
    CHECK(!c.module);
    CHECK(!c.ideal);
}

TEST_CASE("full spec round-trips byte-exactly") {
    auto j = json::parse(R"({
        "id": "demo",
        "tags": ["base"],
        "ring": {"kind": "zn", "n": 8},
        "module": {"kind": "ring"},
        "target": {"kind": "submodule", "members": [0, 4]},
        "multset": {"members": [1]}
    })");
    auto spec = parse_instance(j);
    auto out = instance_to_json(spec);
    auto spec2 = parse_instance(out);
    CHECK(instance_to_json(spec2).dump(2) == out.dump(2));
    auto c = compile(spec);
    CHECK(c.submodule);
    CHECK(c.submodule->members == ElemSet{0, 4});
    CHECK(c.multset);
}

TEST_CASE("strict schema rejects unknown fields") {
    auto j = json::parse(R"({"ring":{"kind":"zn","n":6},"extra":1})");
    CHECK_THROWS_AS(parse_instance(j), input_error);
    auto j2 = json::parse(R"({"ring":{"kind":"zn","n":6,"m":2}})");
    CHECK_THROWS_AS(parse_instance(j2), input_error);
}

TEST_CASE("bad selectors produce diagnostic errors") {
    SECTION("non-submodule target names the closure violation") {
        auto j = json::parse(R"({
            "ring": {"kind": "zn", "n": 6},
            "module": {"kind": "ring"},
            "target": {"kind": "submodule", "members": [0, 2, 3]}
        })");
        auto spec = parse_instance(j);
        try {
            compile(spec);
            FAIL("expected input_error");
        } catch (const input_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("not a submodule") != std::string::npos);
            CHECK(msg.find("2") != std::string::npos);  // witnessing pair appears
        }
    }
    SECTION("non-closed multiplicative set") {
        auto j = json::parse(R"({
            "ring": {"kind": "zn", "n": 12},
            "multset": {"members": [2, 3]}
        })");
        CHECK_THROWS_AS(compile(parse_instance(j)), input_error);
    }
    SECTION("descending member arrays are rejected") {
        auto j = json::parse(R"({
            "ring": {"kind": "zn", "n": 6},
            "multset": {"members": [5, 1]}
        })");
        CHECK_THROWS_AS(parse_instance(j), input_error);
    }
}

TEST_CASE("construction recipes compile") {
    SECTION("product") {
        auto j = json::parse(R"({
            "ring": {"kind": "product",
                     "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 3}]}
        })");
        auto c = compile(parse_instance(j));
        CHECK(c.ring->size == 6);
        CHECK(c.product);
        CHECK(c.product->factors.size() == 2);
    }
    SECTION("idealization") {
        auto j = json::parse(R"({
            "ring": {"kind": "idealization",
                     "ring": {"kind": "zn", "n": 2},
                     "module": {"kind": "ring"}}
        })");
        CHECK(compile(parse_instance(j)).ring->size == 4);
    }
    SECTION("duplication ring and module") {
        auto j = json::parse(R"({
            "ring": {"kind": "duplication", "ring": {"kind": "zn", "n": 4},
                     "ideal": [0, 2]},
            "module": {"kind": "duplication", "module": {"kind": "ring"}, "ideal": [0, 2]}
        })");
        auto c = compile(parse_instance(j));
        CHECK(c.ring->size == 8);
        CHECK(c.module->size == 8);
        CHECK(!check_module_axioms(c.module));
    }
    SECTION("amalgamation") {
        auto j = json::parse(R"({
            "ring": {"kind": "amalgamation",
                     "a": {"kind": "zn", "n": 4}, "b": {"kind": "zn", "n": 2},
                     "hom": [0, 1, 0, 1], "j": [0, 1]}
        })");
        CHECK(compile(parse_instance(j)).ring->size == 8);
    }
    SECTION("localization") {
        auto j = json::parse(R"({
            "ring": {"kind": "localization", "ring": {"kind": "zn", "n": 6},
                     "multset": [1, 3]}
        })");
        CHECK(compile(parse_instance(j)).ring->size == 2);
    }
    SECTION("quotient") {
        auto j = json::parse(R"({
            "ring": {"kind": "quotient", "ring": {"kind": "zn", "n": 12}, "ideal": [0, 4, 8]}
        })");
        CHECK(compile(parse_instance(j)).ring->size == 4);
    }
    SECTION("componentwise module over a product ring") {
        auto j = json::parse(R"({
            "ring": {"kind": "product",
                     "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 4}]},
            "module": {"kind": "componentwise",
                       "factors": [{"kind": "ring"}, {"kind": "ring"}]}
        })");
        auto c = compile(parse_instance(j));
        CHECK(c.module->size == 8);
        CHECK(c.comp_factors.size() == 2);
    }
    SECTION("table ring with broken axioms is rejected") {
        auto j = json::parse(R"({
            "ring": {"kind": "table", "size": 2,
                     "add": [0, 1, 1, 0], "mul": [0, 0, 0, 0], "zero": 0, "one": 1}
        })");
        CHECK_THROWS_AS(compile(parse_instance(j)), input_error);
    }
}

TEST_CASE("serialized construction recipes round-trip") {
    const char* samples[] = {
        R"({"ring":{"kind":"zn","n":6}})",
        R"({"ring":{"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":2},{"kind":"zn","n":3}]}})",
        R"({"ring":{"kind":"idealization","ring":{"kind":"zn","n":4},"module":{"kind":"quotient","ideal":[0,2]}}})",
        R"({"ring":{"kind":"duplication","ring":{"kind":"zn","n":6},"ideal":[0,3]}})",
        R"({"ring":{"kind":"localization","ring":{"kind":"zn","n":6},"multset":[1,3]}})",
    };
    for (const char* s : samples) {
        auto spec = parse_instance(json::parse(s));
        auto j1 = instance_to_json(spec);
        auto j2 = instance_to_json(parse_instance(j1));
        CHECK(j1.dump() == j2.dump());
    }
}
