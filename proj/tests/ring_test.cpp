#include <doctest.h>

#include "hdiff/ring.hpp"
#include "test_util.hpp"

using namespace hdiff;
using testutil::Rng;

namespace {

std::vector<RatFunc> sigma_from_potential(VarSpec spec, int n, const RatFunc& pot) {
    std::vector<RatFunc> s;
    for (int i = 0; i < n; ++i) s.push_back(finite_difference(pot, i));
    return s;
}

Element::Ctx ring_H1(int n, int N = 1) {
    VarSpec spec{n, 0};
    return RingCtx::make(n, N, sigma_from_potential(spec, n, RatFunc(complete_sym(spec, n, 1))));
}

Element::Ctx ring_negH2(int n, int N = 1) {
    VarSpec spec{n, 0};
    return RingCtx::make(n, N, sigma_from_potential(spec, n, -RatFunc(complete_sym(spec, n, 2))));
}

Element random_element(Rng& rng, Element::Ctx ctx, int max_deg, OrderTag tag = OrderTag::DerFirst) {
    Element e = Element::zero(ctx, tag);
    VarSpec spec = ctx->spec();
    int nterms = rng.uniform(1, 3);
    for (int t = 0; t < nterms; ++t) {
        std::vector<Gen> w;
        int deg = rng.uniform(0, max_deg);
        for (int d = 0; d < deg; ++d)
            w.push_back(Gen{rng.uniform(0, 1) == 1, rng.uniform(0, ctx->n() - 1),
                            rng.uniform(0, ctx->copies() - 1)});
        MPoly cp = testutil::random_mpoly(rng, spec, 1, 2);
        if (cp.is_zero()) cp = MPoly::constant(spec, 1);
        e += Element::word(ctx, tag, w, RatFunc(cp));
    }
    return e;
}

}  // namespace

TEST_CASE("x-x exchange, n=2") {
    auto ctx = ring_H1(2);
    VarSpec s = ctx->spec();
    Element x1 = Element::gen_x(ctx, 0), x2 = Element::gen_x(ctx, 1);
    RatFunc h12 = ctx->hdiff(0, 1), one = ctx->rf(1);
    CHECK(x2 * x1 == (x1 * x2).scaled(h12 / (h12 + one)));
}

TEST_CASE("diagonal cross relation") {
    // n=1: x dbar = dbar x - 1
    auto c1 = ring_H1(1);
    Element x = Element::gen_x(c1, 0), d = Element::gen_d(c1, 0);
    CHECK(x * d == d * x - Element::one(c1));

    // n=2: x^1 dbar_1 = dbar_1 x^1 + (1/(1-h12)) dbar_2 x^2 - sigma_1
    auto c2 = ring_H1(2);
    Element x1 = Element::gen_x(c2, 0), d1 = Element::gen_d(c2, 0);
    Element x2 = Element::gen_x(c2, 1), d2 = Element::gen_d(c2, 1);
    RatFunc one = c2->rf(1);
    RatFunc coef = one / (one - c2->hdiff(0, 1));
    CHECK(x1 * d1 == d1 * x1 + (d2 * x2).scaled(coef) - Element::one(c2));
}

TEST_CASE("coefficient exchange matches the weight relations") {
    auto ctx = ring_H1(2);
    VarSpec s = ctx->spec();
    RatFunc h1(hdiff_var(s, 0));
    Element x1 = Element::gen_x(ctx, 0);
    Element d1 = Element::gen_d(ctx, 0);
    CHECK(Element::coefficient(ctx, h1) * x1 == x1.times_coeff_right(h1 + ctx->rf(1)));
    CHECK(Element::coefficient(ctx, h1) * d1 == d1.times_coeff_right(h1 - ctx->rf(1)));
}

TEST_CASE("already-normal words stay put") {
    auto ctx = ring_H1(1);
    Element w1 = Element::word(ctx, OrderTag::DerFirst, {Gen{true, 0, 0}, Gen{false, 0, 0}});
    CHECK(w1.terms().size() == 1);
    Element w2 = Element::word(ctx, OrderTag::XFirst, {Gen{false, 0, 0}, Gen{true, 0, 0}});
    CHECK(w2.terms().size() == 1);
}

TEST_CASE("weights") {
    auto ctx = ring_H1(2);
    Element e = Element::gen_x(ctx, 0) * Element::gen_d(ctx, 1);
    auto w = e.weight();
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, -1});
    Element g = gamma_element(ctx, 0);
    auto wg = g.weight();
    REQUIRE(wg.has_value());
    CHECK(*wg == std::vector<int>{0, 0});
    Element mixed = Element::gen_x(ctx, 0) + Element::gen_d(ctx, 0);
    CHECK(!mixed.weight().has_value());
}

TEST_CASE("weight additivity") {
    Rng rng(testutil::default_seed() + 10);
    auto ctx = ring_H1(2);
    for (int t = 0; t < 8; ++t) {
        std::vector<Gen> wa, wb;
        for (int d = 0; d < 2; ++d) {
            wa.push_back(Gen{rng.uniform(0, 1) == 1, rng.uniform(0, 1), 0});
            wb.push_back(Gen{rng.uniform(0, 1) == 1, rng.uniform(0, 1), 0});
        }
        Element a = Element::word(ctx, OrderTag::DerFirst, wa);
        Element b = Element::word(ctx, OrderTag::DerFirst, wb);
        auto w1 = a.weight(), w2 = b.weight(), w12 = (a * b).weight();
        if (w1 && w2 && !(a * b).is_zero()) {
            REQUIRE(w12.has_value());
            for (int i = 0; i < 2; ++i) CHECK((*w12)[i] == (*w1)[i] + (*w2)[i]);
        }
    }
}

TEST_CASE("epsilon anti-automorphism") {
    auto ctx = ring_H1(2);
    VarSpec s = ctx->spec();
    RatFunc h12 = ctx->hdiff(0, 1), one = ctx->rf(1);
    // eps(dbar_2) = x^2 (empty product), eps(dbar_1) = (h12/(h12-1)) x^1
    CHECK(Element::gen_d(ctx, 1).eps_antiauto() == Element::gen_x(ctx, 1));
    CHECK(Element::gen_d(ctx, 0).eps_antiauto() ==
          Element::gen_x(ctx, 0).scaled(h12 / (h12 - one)));
    // involution on generators and a product
    for (int i = 0; i < 2; ++i) {
        CHECK(Element::gen_x(ctx, i).eps_antiauto().eps_antiauto() == Element::gen_x(ctx, i));
        CHECK(Element::gen_d(ctx, i).eps_antiauto().eps_antiauto() == Element::gen_d(ctx, i));
    }
}

TEST_CASE("epsilon is anti-multiplicative and involutive on random elements") {
    Rng rng(testutil::default_seed() + 11);
    for (auto ctx : {ring_H1(2), ring_negH2(2)}) {
        for (int t = 0; t < 6; ++t) {
            Element a = random_element(rng, ctx, 2);
            Element b = random_element(rng, ctx, 2);
            CHECK((a * b).eps_antiauto() == b.eps_antiauto() * a.eps_antiauto());
            CHECK(a.eps_antiauto().eps_antiauto() == a);
        }
    }
}

TEST_CASE("associativity on random triples") {
    Rng rng(testutil::default_seed() + 12);
    std::vector<Element::Ctx> rings = {ring_H1(2), ring_negH2(2), ring_H1(3), ring_H1(2, 2)};
    for (auto& ctx : rings) {
        for (int t = 0; t < 6; ++t) {
            Element a = random_element(rng, ctx, 2);
            Element b = random_element(rng, ctx, 2);
            Element c = random_element(rng, ctx, 2);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("basis exchange roundtrip") {
    Rng rng(testutil::default_seed() + 13);
    for (auto ctx : {ring_H1(2), ring_negH2(2), ring_H1(2, 2)}) {
        for (int t = 0; t < 6; ++t) {
            Element a = random_element(rng, ctx, 3);
            Element b = a.converted(OrderTag::XFirst).converted(OrderTag::DerFirst);
            CHECK(a == b);
        }
    }
}

TEST_CASE("conversion respects multiplication") {
    Rng rng(testutil::default_seed() + 14);
    auto ctx = ring_negH2(2);
    for (int t = 0; t < 4; ++t) {
        Element a = random_element(rng, ctx, 2);
        Element b = random_element(rng, ctx, 2);
        CHECK((a * b).converted(OrderTag::XFirst) ==
              a.converted(OrderTag::XFirst) * b.converted(OrderTag::XFirst));
    }
}

TEST_CASE("filtration degree is submultiplicative") {
    Rng rng(testutil::default_seed() + 15);
    auto ctx = ring_H1(2);
    for (int t = 0; t < 8; ++t) {
        Element a = random_element(rng, ctx, 2);
        Element b = random_element(rng, ctx, 2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).filtration_degree() <= a.filtration_degree() + b.filtration_degree());
    }
}

TEST_CASE("self test relations") {
    for (auto ctx : {ring_H1(2), ring_H1(3), ring_negH2(2), ring_H1(2, 2)}) {
        Report rep = self_test_relations(ctx);
        for (auto& c : rep.checks) {
            INFO(c.id, " witness=", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("multi-copy component relations") {
    auto ctx = ring_H1(2, 2);
    RatFunc one = ctx->rf(1);
    RatFunc h12 = ctx->hdiff(0, 1);
    auto X = [&](int i, int a) { return Element::gen_x(ctx, i, a); };
    auto D = [&](int i, int a) { return Element::gen_d(ctx, i, a); };
    // x^{2a} x^{1b} = x^{1b} x^{2a} - (1/h12) x^{2b} x^{1a}
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(X(1, a) * X(0, b) == X(0, b) * X(1, a) - (X(1, b) * X(0, a)).scaled(one / h12));
            // dbar_{1a} dbar_{2b} = -(1/h12) dbar_{1b} dbar_{2a} + ((h12^2-1)/h12^2) dbar_{2b} dbar_{1a}
            CHECK(D(0, a) * D(1, b) ==
                  -(D(0, b) * D(1, a)).scaled(one / h12) +
                      (D(1, b) * D(0, a)).scaled((h12 * h12 - one) / (h12 * h12)));
            // cross, distinct sites
            CHECK(X(0, a) * D(1, b) == D(1, b) * X(0, a));
            RatFunc h21 = ctx->hdiff(1, 0);
            RatFunc g = h21 * (h21 - ctx->rf(2)) / ((h21 - one) * (h21 - one));
            CHECK(X(1, a) * D(0, b) == (D(0, b) * X(1, a)).scaled(g));
            // same site: x^{ia} dbar_{ib} = sum_k 1/(1+h_ki) dbar_{kb} x^{ka} - delta_ab
            for (int i = 0; i < 2; ++i) {
                Element rhs = Element::zero(ctx);
                for (int k = 0; k < 2; ++k)
                    rhs += (D(k, b) * X(k, a)).scaled(one / (one + ctx->hdiff(k, i)));
                if (a == b) rhs -= Element::one(ctx);
                CHECK(X(i, a) * D(i, b) == rhs);
            }
        }
}

TEST_CASE("top graded part matches the homogeneous ring") {
    Rng rng(testutil::default_seed() + 16);
    VarSpec spec{2, 0};
    auto ctx = ring_negH2(2);
    auto ctx0 = RingCtx::make(2, 1, {RatFunc(spec), RatFunc(spec)});
    for (int t = 0; t < 6; ++t) {
        std::vector<Gen> wa, wb;
        for (int d = 0; d < 2; ++d) {
            wa.push_back(Gen{rng.uniform(0, 1) == 1, rng.uniform(0, 1), 0});
            wb.push_back(Gen{rng.uniform(0, 1) == 1, rng.uniform(0, 1), 0});
        }
        Element prod = Element::word(ctx, OrderTag::DerFirst, wa) *
                       Element::word(ctx, OrderTag::DerFirst, wb);
        Element prod0 = Element::word(ctx0, OrderTag::DerFirst, wa) *
                        Element::word(ctx0, OrderTag::DerFirst, wb);
        auto top = [](const Element& e) {
            std::map<Element::Key, RatFunc> out;
            int d = e.filtration_degree();
            for (auto& [m, c] : e.terms()) {
                int s = 0;
                for (int x : m) s += x;
                if (s == d) out[m] = c;
            }
            return out;
        };
        CHECK(prod.filtration_degree() == 4);
        CHECK(top(prod) == top(prod0));
    }
}
