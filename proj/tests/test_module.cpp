#include <catch2/catch_amalgamated.hpp>

#include "absorb/module.hpp"

using namespace absorb;

namespace {

Module zn_mod(int n) { return ring_as_module(build_zn(n)); }

Submodule dz(const Module& M, int d) {
    ElemSet m;
    for (Elem e = 0; e < M->size; ++e)
        if (e % d == 0) m.push_back(e);
    return make_submodule(M, m);
}

// F_2^2 over Z_2 with pair encoding (x,y) -> 2x + y
Module f2_plane() {
    auto z2 = build_zn(2);
    std::vector<Elem> add(16), act(8);
    auto enc = [](int x, int y) { return 2 * x + y; };
    for (int x1 = 0; x1 < 2; ++x1)
        for (int y1 = 0; y1 < 2; ++y1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y2 = 0; y2 < 2; ++y2)
                    add[static_cast<std::size_t>(enc(x1, y1)) * 4 + enc(x2, y2)] =
                        enc((x1 + x2) % 2, (y1 + y2) % 2);
    for (int r = 0; r < 2; ++r)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                act[static_cast<std::size_t>(r) * 4 + enc(x, y)] = enc((r * x) % 2, (r * y) % 2);
    return make_module(z2, 4, std::move(add), std::move(act), 0, "F2^2");
}

}  // namespace

TEST_CASE("module axioms") {
    for (int n : {1, 2, 4, 6, 8, 12}) CHECK(!check_module_axioms(zn_mod(n)));
    CHECK(!check_module_axioms(f2_plane()));
}

TEST_CASE("colon operators") {
    auto m12 = zn_mod(12);
    CHECK(colon_ring_full(dz(m12, 4)).members == ElemSet{0, 4, 8});
    CHECK(colon_ring_full(make_submodule(m12, full_set(12))).members == full_set(12));

    auto m8 = zn_mod(8);
    CHECK(colon_module_element(dz(m8, 4), 2).members == ElemSet{0, 2, 4, 6});
    CHECK(colon_module(dz(m8, 4), full_set(8)).members == dz(m8, 4).members);  // (N:_M R)=N
    CHECK(colon_module_element(make_submodule(m8, {0}), 0).members == full_set(8));
}

TEST_CASE("submodule lattice counts") {
    CHECK(enumerate_submodules(zn_mod(4)).size() == 3);
    CHECK(enumerate_submodules(zn_mod(6)).size() == 4);
    CHECK(enumerate_submodules(f2_plane()).size() == 5);
    for (const auto& s : enumerate_submodules(f2_plane()))
        CHECK(!submodule_violation(f2_plane(), s.members));
}

TEST_CASE("prime submodules and M-radical") {
    auto m12 = zn_mod(12);
    CHECK(m_radical(make_submodule(m12, {0})).members == ElemSet{0, 6});

    auto m4 = zn_mod(4);
    CHECK(is_prime_submodule(dz(m4, 2)));
    CHECK(m_radical(dz(m4, 2)).members == dz(m4, 2).members);  // M-rad(P)=P for prime P

    auto m5 = zn_mod(5);
    CHECK(is_prime_submodule(make_submodule(m5, {0})));

    auto m8 = zn_mod(8);
    CHECK(!is_prime_submodule(dz(m8, 4)));
    CHECK_THROWS_AS(is_prime_submodule(make_submodule(m8, full_set(8))), input_error);

    // empty-intersection convention: M-rad(M) = M
    CHECK(m_radical(make_submodule(m8, full_set(8))).members == full_set(8));
}

TEST_CASE("m_radical is monotone and idempotent; matches radical at M=R") {
    for (int n : {4, 6, 8, 9, 12}) {
        auto M = zn_mod(n);
        auto R = M->ring;
        for (const auto& N : enumerate_submodules(M)) {
            auto rad = m_radical(N);
            CHECK(set_subset(N.members, rad.members));
            CHECK(m_radical(rad).members == rad.members);
            if (N.is_proper())
                CHECK(rad.members == radical(Ideal{R, N.members}).members);
        }
    }
}

TEST_CASE("structure flags") {
    auto m12 = zn_mod(12);
    auto f = structure_flags(m12);
    CHECK(f.multiplication);
    CHECK(f.faithful);
    CHECK(f.cyclic);

    auto plane = structure_flags(f2_plane());
    CHECK(!plane.multiplication);

    CHECK(structure_flags(zn_mod(6)).um_set == ElemSet{1, 5});
}

TEST_CASE("submodule_product") {
    auto m8 = zn_mod(8);
    CHECK(submodule_product(dz(m8, 2), dz(m8, 2)).members == dz(m8, 4).members);
    auto M = make_submodule(m8, full_set(8));
    CHECK(submodule_product(dz(m8, 2), M).members == dz(m8, 2).members);
    CHECK(submodule_product(make_submodule(m8, {0}), dz(m8, 2)).members == ElemSet{0});
    CHECK_THROWS_AS(submodule_product(make_submodule(f2_plane(), {0, 1}),
                                      make_submodule(f2_plane(), {0, 1})),
                    input_error);
}

TEST_CASE("check_submodule_predicate") {
    SECTION("(Z_8, 4Z_8, S={1}) is S-1-absorbing primary with witness 1") {
        auto m8 = zn_mod(8);
        auto S = make_multset(m8->ring, {1});
        auto rep = check_submodule_predicate(m8, dz(m8, 4), S,
                                             SubmodulePredicate::s_one_abs_primary);
        CHECK(rep.ok());
        CHECK(rep.witness_s == 1);
    }
    SECTION("prime N with M-rad(N)=N: s_one_abs_prime iff s_one_abs_primary") {
        for (int n : {4, 6, 9, 12}) {
            auto M = zn_mod(n);
            auto S = make_multset(M->ring, {1});
            for (const auto& N : proper_submodules(M)) {
                if (m_radical(N).members != N.members) continue;
                auto prime = check_submodule_predicate(M, N, S,
                                                       SubmodulePredicate::s_one_abs_prime);
                auto primary = check_submodule_predicate(M, N, S,
                                                         SubmodulePredicate::s_one_abs_primary);
                CHECK(prime.applicable == primary.applicable);
                CHECK(prime.holds == primary.holds);
            }
        }
    }
    SECTION("gate violation") {
        auto m8 = zn_mod(8);
        auto S = multset_generate(m8->ring, {2});  // contains 0, meets every (N:M)
        auto rep = check_submodule_predicate(m8, dz(m8, 4), S,
                                             SubmodulePredicate::s_one_abs_primary);
        CHECK(!rep.applicable);
    }
    SECTION("zero module is inapplicable") {
        auto z4 = build_zn(4);
        auto M0 = make_module(z4, 1, {0}, {0, 0, 0, 0}, 0, "0");
        auto rep = check_submodule_predicate(M0, Submodule{M0, {0}}, std::nullopt,
                                             SubmodulePredicate::prime);
        CHECK(!rep.applicable);
    }
}

TEST_CASE("module predicates at M=R agree with ideal predicates") {
    for (int n : {4, 6, 8, 9, 10, 12}) {
        auto M = zn_mod(n);
        auto R = M->ring;
        for (const auto& N : proper_submodules(M)) {
            Ideal I{R, N.members};
            auto ip = check_ideal_predicate(R, I, std::nullopt, IdealPredicate::one_abs_primary);
            auto mp = check_submodule_predicate(M, N, std::nullopt,
                                                SubmodulePredicate::one_abs_primary);
            CHECK(ip.holds == mp.holds);
            for (Elem g = 1; g < R->size; ++g) {
                auto S = multset_generate(R, {g});
                auto is = check_ideal_predicate(R, I, S, IdealPredicate::s_one_abs_primary);
                auto ms = check_submodule_predicate(M, N, S,
                                                    SubmodulePredicate::s_one_abs_primary);
                CHECK(is.applicable == ms.applicable);
                CHECK(is.holds == ms.holds);
                CHECK(is.witness_s == ms.witness_s);
            }
        }
    }
}

TEST_CASE("characterization forms agree (Theorem oracle test)") {
    auto m8 = zn_mod(8);
    auto S = make_multset(m8->ring, {1});
    auto N = dz(m8, 4);
    auto e = check_characterization(m8, N, S, CharForm::elementwise);
    auto ibm = check_characterization(m8, N, S, CharForm::Ibm);
    auto ijm = check_characterization(m8, N, S, CharForm::IJm);
    auto ijk = check_characterization(m8, N, S, CharForm::IJK);
    CHECK(e.ok());
    CHECK(ibm.holds == e.holds);
    CHECK(ijm.holds == e.holds);
    CHECK(ijk.holds == e.holds);
    CHECK(ibm.witness_s == e.witness_s);
    CHECK(ijm.witness_s == e.witness_s);
    CHECK(ijk.witness_s == e.witness_s);

    SECTION("sweep: all four verdicts coincide on Z_6, Z_8, Z_9") {
        for (int n : {6, 8, 9}) {
            auto M = zn_mod(n);
            for (const auto& Nn : proper_submodules(M))
                for (Elem g = 1; g < M->ring->size; ++g) {
                    auto Ss = multset_generate(M->ring, {g});
                    auto a = check_characterization(M, Nn, Ss, CharForm::elementwise);
                    if (!a.applicable) continue;
                    for (auto form : {CharForm::Ibm, CharForm::IJm, CharForm::IJK}) {
                        auto b = check_characterization(M, Nn, Ss, form);
                        CHECK(a.holds == b.holds);
                        CHECK(a.witness_s == b.witness_s);
                    }
                }
        }
    }
}

TEST_CASE("quotients") {
    auto m8 = zn_mod(8);
    auto [Q, pi] = quotient_module(m8, dz(m8, 4));
    CHECK(Q->size == 4);
    CHECK(!check_module_axioms(Q));
    CHECK(!module_hom_violation(pi));
    CHECK(is_epimorphism(pi));
    CHECK(hom_kernel(pi).members == ElemSet{0, 4});

    // image of 2Z_8 in Z_8/4Z_8 is the order-2 submodule
    auto im = hom_image(pi, dz(m8, 2));
    CHECK(im.members.size() == 2);
    CHECK(!submodule_violation(Q, im.members));

    auto [Q0, pi0] = quotient_module(m8, make_submodule(m8, {0}));
    CHECK(Q0->size == 8);
    CHECK(is_epimorphism(pi0));
    CHECK(hom_kernel(pi0).is_zero());

    auto [Qm, pim] = quotient_module(m8, make_submodule(m8, full_set(8)));
    CHECK(Qm->size == 1);
    CHECK(pim.of(5) == Qm->zero_elem);
}

TEST_CASE("hom image and preimage") {
    auto m8 = zn_mod(8);
    auto id = identity_module_hom(m8);
    CHECK(hom_image(id, dz(m8, 2)).members == dz(m8, 2).members);
    auto [Q, pi] = quotient_module(m8, dz(m8, 4));
    CHECK(hom_preimage(pi, Submodule{Q, {Q->zero_elem}}).members == hom_kernel(pi).members);
}

TEST_CASE("lemf radical identities along canonical epimorphisms") {
    for (int n : {8, 12}) {
        auto M = zn_mod(n);
        for (const auto& K : proper_submodules(M)) {
            auto [Q, pi] = quotient_module(M, K);
            for (const auto& N : enumerate_submodules(M)) {
                if (!set_subset(K.members, N.members)) continue;  // need ker(pi) in N
                CHECK(hom_image(pi, m_radical(N)).members ==
                      m_radical(hom_image(pi, N)).members);
            }
            for (const auto& Kq : enumerate_submodules(Q))
                CHECK(hom_preimage(pi, m_radical(Kq)).members ==
                      m_radical(hom_preimage(pi, Kq)).members);
        }
    }
}

TEST_CASE("products over the same ring") {
    auto m6 = zn_mod(6);
    auto m2 = quotient_module(m6, dz(m6, 2)).first;  // Z_2-sized Z_6-module
    auto m3 = quotient_module(m6, dz(m6, 3)).first;
    auto P = product_module(m2, m3);
    CHECK(P->size == 6);
    CHECK(!check_module_axioms(P));
    CHECK(enumerate_submodules(P).size() == 4);  // isomorphic to Z_6 over Z_6

    // N1 x M2 is a submodule whenever N1 is; its M-radical splits
    auto m8 = zn_mod(8);
    auto P8 = product_module(m8, m8);
    auto N1 = dz(m8, 4);
    auto M2full = make_submodule(m8, full_set(8));
    auto NxM = product_submodule(P8, N1, M2full);
    CHECK(!submodule_violation(P8, NxM.members));
    CHECK(m_radical(NxM).members ==
          product_submodule(P8, m_radical(N1), M2full).members);
}

TEST_CASE("submodule_as_module") {
    auto m12 = zn_mod(12);
    auto [K, iota] = submodule_as_module(dz(m12, 2));
    CHECK(K->size == 6);
    CHECK(!check_module_axioms(K));
    CHECK(!module_hom_violation(iota));
    CHECK(hom_kernel(iota).is_zero());
}
