// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance). Exit code 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <sstream>

#include "hdiff/reps.hpp"
#include "hdiff/rmatrix.hpp"
#include "hdiff/symmetry.hpp"
#include "hdiff/weyl.hpp"

using namespace hdiff;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string detail;

    explicit Criterion(const std::string& n) : name(n), start(std::chrono::steady_clock::now()) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void done() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << ms / 1000.0 << " s)";
        if (!ok) std::cout << "  -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

uint64_t seed_base() {
    if (const char* s = std::getenv("HDIFF_SEED")) return strtoull(s, nullptr, 10);
    return 2017;
}

SigmaSpec sigma_site_quadratic(int n) {
    std::vector<UniRat> sites(n, UniRat::zero());
    sites[0] = UniRat::poly({Rat(0), Rat(0), Rat(1)});
    return SigmaSpec::from_sites(n, sites);
}

SigmaSpec sigma_site_cubic(int n) {
    std::vector<UniRat> sites(n, UniRat::zero());
    sites[0] = UniRat::poly({Rat(0), Rat(0), Rat(0), Rat(1)});
    return SigmaSpec::from_sites(n, sites);
}

void criterion1() {
    Criterion c("1. operator identities (involution, shift, ice, skew inverse, dYBE) for n = 2,3,4");
    for (int n = 2; n <= 4; ++n) {
        Report rep = check_r_properties(n);
        for (auto& ch : rep.checks)
            c.require(ch.pass, "n=" + std::to_string(n) + " " + ch.id + " at " + ch.witness);
    }
    c.done();
}

void criterion2() {
    Criterion c("2. basis-consistency equivalence of analytic and brute-force checks");
    uint64_t seed = seed_base();
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<std::string, SigmaSpec>> sigmas = {
            {"H_1", SigmaSpec::complete_h(n, 1)},
            {"-H_2", SigmaSpec::complete_h(n, 2, Rat(-1))},
            {"H_3", SigmaSpec::complete_h(n, 3)},
            {"site-quadratic", sigma_site_quadratic(n)},
            {"seeded", random_sigma_spec(seed + n, n)},
        };
        for (int N = 1; N <= 2; ++N) {
            for (auto& [label, sp] : sigmas) {
                auto ctx = make_ring(n, N, sp);
                Report rep = pbw_overlap_check(ctx, PbwMode::Both);
                bool analytic = true, brute = true, agree = true;
                std::string wa, wb;
                for (auto& ch : rep.checks) {
                    if (ch.id == "pbw_analytic") analytic = ch.pass, wa = ch.witness;
                    if (ch.id == "pbw_bruteforce") brute = ch.pass, wb = ch.witness;
                    if (ch.id == "modes_agree") agree = ch.pass;
                }
                std::string tag = "(n=" + std::to_string(n) + ",N=" + std::to_string(N) + "," + label + ")";
                c.require(agree, "modes disagree at " + tag + ": " + wa + " vs " + wb);
                if (label == "H_1") c.require(analytic && brute, "H_1 must pass at " + tag);
                if (label == "-H_2" && N == 1) c.require(analytic && brute, "-H_2 must pass at " + tag);
            }
        }
    }
    // a seeded non-solution fails in both modes with the same witness
    {
        VarSpec s{2, 0};
        auto ctx = RingCtx::make(2, 1, {RatFunc::variable(s, 0), RatFunc(s)});
        Report rep = pbw_overlap_check(ctx, PbwMode::Both);
        bool analytic = true, brute = true, agree = false;
        std::string wa, wb;
        for (auto& ch : rep.checks) {
            if (ch.id == "pbw_analytic") analytic = ch.pass, wa = ch.witness;
            if (ch.id == "pbw_bruteforce") brute = ch.pass, wb = ch.witness;
            if (ch.id == "modes_agree") agree = ch.pass;
        }
        c.require(!analytic && !brute, "non-solution must fail in both modes");
        c.require(agree && wa == wb && !wa.empty(), "witnesses differ: " + wa + " vs " + wb);
    }
    c.done();
}

void criterion3() {
    Criterion c("3. difference-system theory (collapse identities, decomposition round trip, potentials)");
    // power-sum collapse
    for (int n = 2; n <= 4; ++n) {
        VarSpec s{n, 0};
        for (int k = 0; k <= n + 2; ++k) {
            RatFunc sum(s);
            for (int j = 0; j < n; ++j)
                sum += RatFunc(MPoly::variable(s, j, k)) / RatFunc(chi_poly(s, n, j));
            RatFunc expect = k <= n - 2 ? RatFunc(s) : RatFunc(complete_sym(s, n, k - n + 1));
            c.require(sum == expect, "collapse identity n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    // decomposition round trip on seeded potentials
    uint64_t seed = seed_base();
    int count = 0;
    for (int n = 2; n <= 3 && count < 20; ++n) {
        for (int t = 0; t < 10 && count < 20; ++t, ++count) {
            SigmaSpec sp = random_sigma_spec(seed * 31 + count, n);
            VarSpec s{n, 0};
            RatFunc sigma = sp.realize(s);
            auto dec = w_decompose(sigma, n);
            c.require(dec.in_wbar, "seeded potential not recognized, n=" + std::to_string(n));
            if (dec.in_wbar) {
                c.require(dec.spec.realize(s) == sigma, "round trip failed at seed " + std::to_string(count));
                bool same_sites = dec.spec.hpart == sp.hpart;
                for (int k = 0; k < n && same_sites; ++k)
                    if (!(dec.spec.site[k] == sp.site[k])) same_sites = false;
                c.require(same_sites, "canonical forms differ at seed " + std::to_string(count));
            }
        }
    }
    // potentials from the standard site lists
    {
        VarSpec s{2, 0};
        RatFunc one = RatFunc::constant(s, 1);
        RatFunc p1 = potential_from_sigmas({one, one});
        RatFunc d1 = p1 - RatFunc(complete_sym(s, 2, 1));
        c.require(finite_difference(d1, 0).is_zero() && finite_difference(d1, 1).is_zero(),
                  "H_1 recovery");
        RatFunc h1 = RatFunc::variable(s, 0), h2 = RatFunc::variable(s, 1);
        RatFunc p2 = potential_from_sigmas({-h1 - (h1 + h2) + one, -h2 - (h1 + h2) + one});
        RatFunc d2 = p2 + RatFunc(complete_sym(s, 2, 2));
        c.require(finite_difference(d2, 0).is_zero() && finite_difference(d2, 1).is_zero(),
                  "-H_2 recovery");
    }
    c.done();
}

void criterion4() {
    Criterion c("4. central elements, recovery of the Gamma family, quadratic center");
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<std::string, SigmaSpec>> sigmas = {
            {"H_1", SigmaSpec::complete_h(n, 1)},
            {"-H_2", SigmaSpec::complete_h(n, 2, Rat(-1))},
            {"site-cubic", sigma_site_cubic(n)},
        };
        for (auto& [label, sp] : sigmas) {
            auto ctx = make_ring(n, 1, sp);
            auto cs = central_elements(ctx, sp);
            for (size_t k = 0; k < cs.size(); ++k) {
                Report rep = verify_centrality(ctx, cs[k], "c");
                c.require(rep.all_pass(), "centrality of c_" + std::to_string(k + 1) + " (n=" +
                                              std::to_string(n) + "," + label + ")");
            }
            Report gr = gamma_recovery(ctx, sp);
            c.require(gr.all_pass(), "Gamma recovery (n=" + std::to_string(n) + "," + label + ")");
        }
    }
    // V Vinv = Id for n = 4 (smaller n covered by gamma_recovery above)
    {
        SigmaSpec sp = SigmaSpec::complete_h(4, 1);
        auto ctx = make_ring(4, 1, sp);
        Report gr = gamma_recovery(ctx, sp);
        for (auto& ch : gr.checks)
            if (ch.id == "V Vinv = Id") c.require(ch.pass, "V Vinv at n=4");
    }
    // quadratic slice
    {
        auto c22 = make_ring(2, 2, SigmaSpec::complete_h(2, 1));
        auto q = quadratic_center_scan(c22, 3);
        c.require(q.dim_mod_constants == 1,
                  "(2,2) quadratic center dimension = " + std::to_string(q.dim_mod_constants));
        Element expected = Element::zero(c22);
        for (int a = 0; a < 2; ++a) expected += glN_generator(c22, a, a);
        expected -= Element::coefficient(c22, RatFunc(complete_sym(c22->spec(), 2, 1)));
        c.require(element_in_span(expected, q.basis), "(2,2) span witness");
        Report vr = verify_centrality(c22, expected, "sum A - H_1");
        c.require(vr.all_pass(), "sum A - H_1 centrality");

        auto c21 = make_ring(2, 1, SigmaSpec::complete_h(2, 1));
        auto q21 = quadratic_center_scan(c21, 3);
        auto cs = central_elements(c21, SigmaSpec::complete_h(2, 1));
        c.require(element_in_span(cs[0], q21.basis), "(2,1) scan contains c_1");
        c.require(element_in_span(cs[1], q21.basis), "(2,1) scan contains c_2");
        Report gl = glN_check(c22);
        c.require(gl.all_pass(), "glN relations at (2,2): " + (gl.all_pass() ? "" : gl.checks[0].witness));
    }
    c.done();
}

void criterion5() {
    Criterion c("5. localized Weyl-algebra isomorphism for n <= 2");
    for (int n = 1; n <= 2; ++n) {
        for (auto sp : {SigmaSpec::complete_h(n, 1), SigmaSpec::complete_h(n, 2, Rat(-1))}) {
            Report rep = check_iso(n, sp);
            for (auto& ch : rep.checks)
                c.require(ch.pass, "n=" + std::to_string(n) + " " + ch.id + " " + ch.witness);
        }
    }
    c.done();
}

void criterion6() {
    Criterion c("6. finite-dimensional modules and the indecomposable fixtures");
    // the sl2-like family
    auto sp2 = SigmaSpec::complete_h(1, 2);
    auto ctx2 = make_ring(1, 1, sp2);
    for (int d = 0; d <= 3; ++d) {
        Rat lambda(d + 1, 2);
        auto dims = finite_module_dims(sp2, {lambda});
        c.require(dims.has_value() && (*dims)[0] == d, "dimension vector at d=" + std::to_string(d));
        if (!dims) continue;
        MatrixRep rep = build_matrix_module(ctx2, {lambda}, *dims);
        c.require(rep.dim == d + 1, "module dimension at d=" + std::to_string(d));
        Report vr = verify_module(sp2.sigmas(VarSpec{1, 0}), rep);
        c.require(vr.all_pass(), "module verification at d=" + std::to_string(d));
        auto irr = irreducibility_test(sp2, {lambda}, *dims, rep);
        c.require(irr.analytic_irreducible && irr.oracle_irreducible && !irr.oracle_reducible,
                  "irreducibility at d=" + std::to_string(d));
    }
    // sigma = H_1 admits no finite-dimensional modules
    {
        auto sp1 = SigmaSpec::complete_h(1, 1);
        uint64_t seed = seed_base() * 7 + 1;
        auto next = [&seed]() {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            return (int)((seed >> 33) % 41) - 20;
        };
        for (int t = 0; t < 10; ++t) {
            Rat lambda(next(), 3);
            c.require(!finite_module_dims(sp1, {lambda}).has_value(),
                      "H_1 produced a candidate dimension");
        }
        auto spn2 = SigmaSpec::complete_h(2, 1);
        for (int t = 0; t < 5; ++t) {
            Rat l1(next(), 3), l2 = Rat(next(), 5) + Rat(1, 7);
            c.require(!finite_module_dims(spn2, {l1, l2}).has_value(),
                      "H_1 (n=2) produced a candidate dimension");
        }
    }
    // sigma = H_2 with n = 2: the integral obstruction
    {
        auto sp = SigmaSpec::complete_h(2, 2);
        uint64_t seed = seed_base() * 13 + 5;
        auto next = [&seed]() {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            return (int)((seed >> 33) % 31) - 15;
        };
        for (int t = 0; t < 10; ++t) {
            Rat l1 = Rat(next(), 3) + Rat(1, 11), l2 = Rat(next(), 5) + Rat(2, 7);
            Rat diff = l1 - l2;
            if (diff.get_den() == 1) l2 += Rat(1, 13);
            c.require(!finite_module_dims(sp, {l1, l2}).has_value(),
                      "H_2 (n=2) produced a candidate at generic weights");
        }
    }
    // fixtures
    std::vector<Fixture> fx = {fixture_nondiagonalizable(), fixture_sixth_root(),
                               fixture_shifted_chain(3, Rat(0), Rat(1, 2))};
    for (auto& f : fx) {
        Report vr = verify_module(f.sigma_sites, f.rep);
        c.require(vr.all_pass(), f.name + " verification");
        auto scan = invariant_subspace_scan(f.rep);
        c.require(scan.oracle_reducible, f.name + " reducibility");
        c.require(scan.indecomposable_certified, f.name + " indecomposability");
    }
    c.done();
}

void criterion7() {
    Criterion c("7. central characters of lowest-weight modules (sign resolved)");
    int resolved_sign = 0;
    for (int n = 1; n <= 2; ++n) {
        for (auto sp : {SigmaSpec::complete_h(n, 1), SigmaSpec::complete_h(n, 2, Rat(-1))}) {
            auto ctx = make_ring(n, 1, sp);
            auto cc = central_character_lowest(ctx, sp, symbolic_weight(n));
            c.require(cc.sign != 0, "scalar does not match either sign at n=" + std::to_string(n));
            for (auto& s : cc.scalar)
                c.require(s.is_polynomial(), "scalar is not polynomial in the weights");
            if (resolved_sign == 0) resolved_sign = cc.sign;
            c.require(cc.sign == resolved_sign, "sign flips between cases");
        }
    }
    if (c.ok)
        std::cout << "       resolved sign: c(t) acts by " << (resolved_sign < 0 ? "-" : "+")
                  << "rho(t) at the shifted weight\n";
    c.done();
}

void criterion8() {
    Criterion c("8. symmetric-group and braid actions");
    for (int N = 1; N <= 2; ++N) {
        auto ctx = make_ring(3, N, SigmaSpec::complete_h(3, 1));
        for (auto kind : {SymKind::S, SymKind::SPrime}) {
            Report rep = group_relations_check(ctx, kind);
            c.require(rep.all_pass(), std::string(kind == SymKind::S ? "s" : "s'") +
                                          " relations at N=" + std::to_string(N));
        }
    }
    {
        auto ctx = make_ring(3, 1, SigmaSpec::complete_h(3, 1));
        Report rep = group_relations_check(ctx, SymKind::QCheck);
        c.require(rep.all_pass(), "braid operator relations");
        // the Gamma family is permuted
        for (int i = 0; i + 1 < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
                c.require(apply_symmetry(SymKind::QCheck, i, gamma_element(ctx, j)) ==
                              gamma_element(ctx, sj),
                          "Gamma permutation");
            }
    }
    c.require(!symmetry_admissible(SymKind::QCheck, sigma_site_quadratic(2)),
              "braid operators must reject a site-type potential");
    c.require(symmetry_admissible(SymKind::QCheck, SigmaSpec::complete_h(2, 1)), "H_1 admissible");
    c.done();
}

void criterion9() {
    Criterion c("9. reflection equation and the induced action on the L generators");
    for (int N = 1; N <= 2; ++N) {
        auto ctx = make_ring(2, N, SigmaSpec::complete_h(2, 1));
        Report rep = tau_and_reflection_check(ctx);
        for (auto& ch : rep.checks)
            c.require(ch.pass, "N=" + std::to_string(N) + " " + ch.id + " " + ch.witness);
    }
    c.done();
}

void criterion10() {
    Criterion c("10. engine soundness (associativity, basis exchange, involution, weights)");
    uint64_t seed = seed_base() + 99;
    auto next = [&seed]() {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return (int)(seed >> 33);
    };
    std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}};
    std::vector<Element::Ctx> rings;
    for (auto& [n, N] : shapes) rings.push_back(make_ring(n, N, SigmaSpec::complete_h(n, 1)));

    auto random_el = [&](Element::Ctx ctx, int deg) {
        Element e = Element::zero(ctx);
        VarSpec spec = ctx->spec();
        int terms = 1 + next() % 2;
        for (int t = 0; t < terms; ++t) {
            std::vector<Gen> w;
            int d = next() % (deg + 1);
            for (int k = 0; k < d; ++k)
                w.push_back(Gen{next() % 2 == 0, next() % ctx->n(), next() % ctx->copies()});
            MPoly cf = MPoly::constant(spec, Rat(next() % 7 - 3));
            if (next() % 2) cf += MPoly::variable(spec, next() % ctx->n());
            if (cf.is_zero()) cf = MPoly::constant(spec, 1);
            e += Element::word(ctx, OrderTag::DerFirst, w, RatFunc(cf));
        }
        return e;
    };

    for (int t = 0; t < 100; ++t) {
        auto ctx = rings[t % rings.size()];
        Element a = random_el(ctx, 2), b = random_el(ctx, 2), cc = random_el(ctx, 2);
        c.require((a * b) * cc == a * (b * cc), "associativity at trial " + std::to_string(t));
        if (t % 4 == 0) {
            c.require(a.converted(OrderTag::XFirst).converted(OrderTag::DerFirst) == a,
                      "basis exchange at trial " + std::to_string(t));
            c.require((a * b).eps_antiauto() == b.eps_antiauto() * a.eps_antiauto(),
                      "anti-multiplicativity at trial " + std::to_string(t));
            c.require(a.eps_antiauto().eps_antiauto() == a, "involution at trial " + std::to_string(t));
        }
        if (t % 7 == 0) {
            auto wa = a.weight(), wb = b.weight();
            Element ab = a * b;
            if (wa && wb && !ab.is_zero()) {
                auto wab = ab.weight();
                bool add = wab.has_value();
                if (add)
                    for (size_t i = 0; i < wa->size(); ++i)
                        if ((*wab)[i] != (*wa)[i] + (*wb)[i]) add = false;
                c.require(add, "weight additivity at trial " + std::to_string(t));
            }
        }
    }
    c.done();
}

}  // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic, zero tolerance)\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    {
        auto probe = conjecture_probe(seed_base());
        std::cout << "       finite-dimensional-module probe (informational):\n" << probe.str();
    }
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
