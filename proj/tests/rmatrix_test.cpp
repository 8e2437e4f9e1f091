#include <doctest.h>

#include "hdiff/rmatrix.hpp"

using namespace hdiff;

TEST_CASE("rhat entries, n=2") {
    VarSpec s{2, 0};
    ROperator r = rhat(2, s);
    RatFunc h12(hdiff_diff(s, 0, 1));
    RatFunc one = RatFunc::constant(s, 1);
    CHECK(r.entry(0, 1, 0, 1) == one / h12);
    CHECK(r.entry(1, 0, 0, 1) == one);
    CHECK(r.entry(0, 1, 1, 0) == (h12 * h12 - one) / (h12 * h12));
    CHECK(r.entry(0, 0, 0, 0) == one);
}

TEST_CASE("skew inverse entries, n=2") {
    VarSpec s{2, 0};
    ROperator p = psi_skew(2, s);
    RatFunc one = RatFunc::constant(s, 1);
    CHECK(p.entry(0, 1, 1, 0) == one);
    RatFunc h21(hdiff_diff(s, 1, 0));
    CHECK(p.entry(1, 0, 0, 1) ==
          (h21 - one) * (h21 - one) / (h21 * (h21 - RatFunc::constant(s, 2))));
    // Q^-_1 = chi_1[-eps_1]/chi_1 = (h12-1)/h12
    RatFunc chi1(chi_poly(s, 2, 0));
    RatFunc h12(hdiff_diff(s, 0, 1));
    CHECK(chi1.shift_one(0, -1) / chi1 == (h12 - one) / h12);
}

TEST_CASE("all R properties hold for n=2,3") {
    for (int n = 2; n <= 3; ++n) {
        Report rep = check_r_properties(n);
        for (auto& c : rep.checks) {
            INFO("n=", n, " check=", c.id, " witness=", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("mutated entry breaks involutivity with witness") {
    VarSpec s{2, 0};
    ROperator r = rhat(2, s);
    RatFunc h12(hdiff_diff(s, 0, 1));
    r.set(0, 1, 0, 1, RatFunc::constant(s, 2) / h12);
    Report rep = check_r_properties(r, psi_skew(2, s));
    bool found = false;
    for (auto& c : rep.checks) {
        if (c.id == "rhat_squared_id") {
            CHECK(!c.pass);
            CHECK(c.witness.substr(0, 4) == "(1,2");
            found = true;
        }
    }
    CHECK(found);
}
