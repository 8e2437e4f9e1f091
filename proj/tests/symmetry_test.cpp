#include <doctest.h>

#include "hdiff/symmetry.hpp"

using namespace hdiff;

TEST_CASE("generator images") {
    auto ctx = make_ring(2, 1, SigmaSpec::complete_h(2, 1));
    RatFunc h = ctx->hdiff(0, 1), one = ctx->rf(1);
    // s_1(x^1) = -x^2 h_12
    CHECK(apply_symmetry(SymKind::S, 0, Element::gen_x(ctx, 0)) ==
          -Element::gen_x(ctx, 1).times_coeff_right(h));
    // qcheck_1(x^1) = -x^2 h_12/(h_12 - 1)
    CHECK(apply_symmetry(SymKind::QCheck, 0, Element::gen_x(ctx, 0)) ==
          -Element::gen_x(ctx, 1).times_coeff_right(h / (h - one)));
    // s_1 s_1 = id on x^1
    CHECK(apply_symmetry(SymKind::S, 0, apply_symmetry(SymKind::S, 0, Element::gen_x(ctx, 0))) ==
          Element::gen_x(ctx, 0));
    // h variables are permuted
    Element h1 = Element::coefficient(ctx, RatFunc::variable(ctx->spec(), 0));
    Element h2 = Element::coefficient(ctx, RatFunc::variable(ctx->spec(), 1));
    CHECK(apply_symmetry(SymKind::S, 0, h1) == h2);
}

TEST_CASE("s-prime is epsilon conjugate of s") {
    auto ctx = make_ring(2, 1, SigmaSpec::complete_h(2, 1));
    for (int s = 0; s < 2; ++s) {
        for (auto g : {Element::gen_x(ctx, s), Element::gen_d(ctx, s)}) {
            Element lhs = apply_symmetry(SymKind::SPrime, 0, g);
            Element rhs = apply_symmetry(SymKind::S, 0, g.eps_antiauto()).eps_antiauto();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("admissibility gate") {
    CHECK(symmetry_admissible(SymKind::QCheck, SigmaSpec::complete_h(2, 1)));
    CHECK(symmetry_admissible(SymKind::QCheck, SigmaSpec::complete_h(2, 2, Rat(-1))));
    std::vector<UniRat> sites(2, UniRat::zero());
    sites[0] = UniRat::poly({Rat(0), Rat(0), Rat(1)});
    SigmaSpec site_sigma = SigmaSpec::from_sites(2, sites);
    CHECK(!symmetry_admissible(SymKind::QCheck, site_sigma));
    CHECK(symmetry_admissible(SymKind::S, site_sigma));
}

TEST_CASE("group relations for n = 3") {
    auto ctx = make_ring(3, 1, SigmaSpec::complete_h(3, 1));
    for (auto kind : {SymKind::S, SymKind::SPrime, SymKind::QCheck}) {
        Report rep = group_relations_check(ctx, kind);
        for (auto& c : rep.checks) {
            INFO(c.id, " ", c.witness);
            CHECK(c.pass);
        }
    }
    // N = 2 copies with the plain symmetric-group action
    auto ctx2 = make_ring(2, 2, SigmaSpec::complete_h(2, 1));
    Report rep2 = group_relations_check(ctx2, SymKind::S);
    for (auto& c : rep2.checks) {
        INFO(c.id, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("qcheck permutes the Gamma family") {
    auto ctx = make_ring(3, 1, SigmaSpec::complete_h(3, 1));
    for (int i = 0; i + 1 < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
            CHECK(apply_symmetry(SymKind::QCheck, i, gamma_element(ctx, j)) ==
                  gamma_element(ctx, sj));
        }
}

TEST_CASE("weyl-side braid action") {
    Report rep = group_relations_check_weyl(3);
    for (auto& c : rep.checks) {
        INFO(c.id, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("reflection equation and the L action") {
    for (int N = 1; N <= 2; ++N) {
        auto ctx = make_ring(2, N, SigmaSpec::complete_h(2, 1));
        Report rep = tau_and_reflection_check(ctx);
        for (auto& c : rep.checks) {
            INFO("N=", N, " ", c.id, " ", c.witness);
            CHECK(c.pass);
        }
    }
}
