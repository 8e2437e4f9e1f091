#include "hdiff/center.hpp"

#include <functional>
#include <sstream>

namespace hdiff {

namespace {

// Exact rational linear algebra on rows assembled from RatFunc-linear
// equations: each equation sum_u coeff_u(h) c_u = rhs(h) is cleared to a
// polynomial identity and split by monomial.
struct RatLinearSystem {
    int unknowns;
    std::vector<std::vector<Rat>> rows;  // row = coefficients, then rhs

    explicit RatLinearSystem(int u) : unknowns(u) {}

    void add(const std::vector<RatFunc>& coeffs, const RatFunc& rhs) {
        VarSpec spec = rhs.spec();
        RatFunc::FactorMap all;
        auto merge = [&](const RatFunc& r) {
            for (auto& [f, m] : r.den_factors()) {
                auto it = all.find(f);
                if (it == all.end()) all[f] = m;
                else it->second = std::max(it->second, m);
            }
        };
        for (auto& c : coeffs) merge(c);
        merge(rhs);
        MPoly big = MPoly::constant(spec, 1);
        for (auto& [f, m] : all) big = big * f.pow(m);
        std::vector<MPoly> cleared;
        for (auto& c : coeffs) {
            RatFunc cc = c * RatFunc(big);
            if (!cc.is_polynomial()) throw Error("RatLinearSystem: clearing failed");
            cleared.push_back(cc.num());
        }
        RatFunc rr = rhs * RatFunc(big);
        if (!rr.is_polynomial()) throw Error("RatLinearSystem: clearing failed");
        std::map<Mono, std::vector<Rat>, GrlexLess> bym;
        auto slot = [&](const Mono& m) -> std::vector<Rat>& {
            auto it = bym.find(m);
            if (it == bym.end()) it = bym.emplace(m, std::vector<Rat>(unknowns + 1, Rat(0))).first;
            return it->second;
        };
        for (int u = 0; u < unknowns; ++u)
            for (auto& [m, v] : cleared[u].terms()) slot(m)[u] = v;
        for (auto& [m, v] : rr.num().terms()) slot(m)[unknowns] = v;
        for (auto& [m, r] : bym) rows.push_back(r);
    }

    // reduced row echelon; returns pivot column per row
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < unknowns && r < (int)rows.size(); ++c) {
            int p = -1;
            for (int i = r; i < (int)rows.size(); ++i)
                if (sgn(rows[i][c]) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(rows[p], rows[r]);
            Rat d = rows[r][c];
            for (auto& v : rows[r]) v /= d;
            for (int i = 0; i < (int)rows.size(); ++i) {
                if (i == r || sgn(rows[i][c]) == 0) continue;
                Rat f = rows[i][c];
                for (int cc = 0; cc <= unknowns; ++cc) rows[i][cc] -= f * rows[r][cc];
            }
            pivots.push_back(c);
            ++r;
        }
        rows.resize(r);
        return pivots;
    }

    // kernel basis of the homogeneous system (rhs ignored)
    std::vector<std::vector<Rat>> kernel() {
        auto pivots = rref();
        std::vector<bool> is_pivot(unknowns, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rat>> out;
        for (int c = 0; c < unknowns; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Rat> v(unknowns, Rat(0));
            v[c] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
            out.push_back(v);
        }
        return out;
    }

    // particular solution when consistent
    std::optional<std::vector<Rat>> solve() {
        auto pivots = rref();
        for (auto& row : rows) {
            bool allz = true;
            for (int c = 0; c < unknowns; ++c)
                if (sgn(row[c]) != 0) allz = false;
            if (allz && sgn(row[unknowns]) != 0) return std::nullopt;
        }
        std::vector<Rat> v(unknowns, Rat(0));
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = rows[r][unknowns];
        return v;
    }
};

}  // namespace

std::vector<RatFunc> rho_poly(const SigmaSpec& sigma, VarSpec spec) {
    int n = sigma.n;
    std::vector<RatFunc> rho(n, RatFunc(spec));
    for (int k = 0; k < n; ++k) {
        UniRat full = sigma.full_site(k);
        if (full.is_zero()) continue;
        RatFunc part = full.at_site(spec, k) / RatFunc(chi_poly(spec, n, k));
        auto eskip = elementary_gen_skip(spec, n, k);
        for (int d = 0; d < n; ++d) rho[d] += RatFunc(eskip[d]) * part;
    }
    // verify the defining finite-difference system
    auto sig = sigma.sigmas(spec);
    for (int j = 0; j < n; ++j) {
        auto eskip = elementary_gen_skip(spec, n, j);
        for (int d = 0; d < n; ++d) {
            if (finite_difference(rho[d], j) != RatFunc(eskip[d]) * sig[j])
                throw Error("rho_poly: difference system failed at site " + std::to_string(j + 1));
        }
    }
    return rho;
}

std::vector<Element> central_elements(Element::Ctx ctx, const SigmaSpec& sigma) {
    const RingCtx& c = *ctx;
    VarSpec spec = c.spec();
    int n = c.n();
    auto rho = rho_poly(sigma, spec);
    std::vector<Element> out;
    for (int k = 1; k <= n; ++k) {
        Element ck = Element::zero(ctx);
        for (int j = 0; j < n; ++j) {
            MPoly dek = elementary_gen_skip(spec, n, j)[k - 1];  // d e_k / d h_j
            ck += gamma_element(ctx, j).scaled(RatFunc(dek));
        }
        ck -= Element::coefficient(ctx, rho[k - 1]);
        out.push_back(ck);
    }
    return out;
}

Report verify_centrality(Element::Ctx ctx, const Element& e, const std::string& label) {
    Report rep;
    const RingCtx& c = *ctx;
    for (int i = 0; i < c.n(); ++i) {
        Element h = Element::coefficient(ctx, RatFunc::variable(c.spec(), i));
        rep.add(label + " commutes with h" + std::to_string(i + 1), e.commutator(h).is_zero());
        for (int a = 0; a < c.copies(); ++a) {
            std::string suf = c.copies() > 1 ? "," + std::to_string(a + 1) : "";
            Element cx = e.commutator(Element::gen_x(ctx, i, a));
            rep.add(label + " commutes with x" + std::to_string(i + 1) + suf, cx.is_zero(),
                    cx.is_zero() ? "" : cx.str());
            Element cd = e.commutator(Element::gen_d(ctx, i, a));
            rep.add(label + " commutes with d" + std::to_string(i + 1) + suf, cd.is_zero(),
                    cd.is_zero() ? "" : cd.str());
        }
    }
    return rep;
}

Report gamma_recovery(Element::Ctx ctx, const SigmaSpec& sigma) {
    Report rep;
    const RingCtx& c = *ctx;
    VarSpec spec = c.spec();
    int n = c.n();
    RatFunc one = c.rf(1);
    // V^k_j = d e_j / d h_k, (V^{-1})^j_i = (-1)^{j-1} h_i^{n-j} / chi_i
    auto V = [&](int k, int j) { return RatFunc(elementary_gen_skip(spec, n, k)[j]); };
    auto Vinv = [&](int j, int i) {
        RatFunc v = RatFunc(MPoly::variable(spec, i, n - 1 - j)) / RatFunc(chi_poly(spec, n, i));
        return (j % 2 == 0) ? v : -v;
    };
    bool vv = true;
    for (int i = 0; i < n && vv; ++i)
        for (int j = 0; j < n && vv; ++j) {
            RatFunc s(spec);
            for (int k = 0; k < n; ++k) s += V(i, k) * Vinv(k, j);
            if (s != (i == j ? one : RatFunc(spec))) vv = false;
        }
    rep.add("V Vinv = Id", vv);

    auto cs = central_elements(ctx, sigma);
    bool grec = true;
    std::string wit;
    for (int j = 0; j < n; ++j) {
        Element rhs = Element::zero(ctx);
        for (int k = 0; k < n; ++k) rhs += cs[k].scaled(Vinv(k, j));
        RatFunc site = sigma.full_site(j).at_site(spec, j) / RatFunc(chi_poly(spec, n, j));
        rhs += Element::coefficient(ctx, site);
        if (gamma_element(ctx, j) != rhs) {
            grec = false;
            wit = "Gamma_" + std::to_string(j + 1);
        }
    }
    rep.add("Gamma recovery from central elements", grec, wit);
    return rep;
}

Element glN_generator(Element::Ctx ctx, int a, int b) {
    Element e = Element::zero(ctx);
    for (int i = 0; i < ctx->n(); ++i)
        e += Element::word(ctx, OrderTag::DerFirst, {Gen{true, i, a}, Gen{false, i, b}});
    return e;
}

Element m_generator(Element::Ctx ctx, int i, int j) {
    Element e = Element::zero(ctx);
    for (int b = 0; b < ctx->copies(); ++b)
        e += Element::word(ctx, OrderTag::DerFirst, {Gen{true, j, b}, Gen{false, i, b}});
    return e;
}

Report glN_check(Element::Ctx ctx) {
    Report rep;
    const RingCtx& c = *ctx;
    int n = c.n(), N = c.copies();
    bool wh = true, wx = true, wd = true, waa = true, wm = true;
    std::string xw, dw, aw, mw;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Element A = glN_generator(ctx, a, b);
            for (int i = 0; i < n; ++i) {
                Element h = Element::coefficient(ctx, RatFunc::variable(c.spec(), i));
                if (!A.commutator(h).is_zero()) wh = false;
                for (int g = 0; g < N; ++g) {
                    Element ex = A.commutator(Element::gen_x(ctx, i, g));
                    Element expect_x = (g == a) ? Element::gen_x(ctx, i, b) : Element::zero(ctx);
                    if (ex != expect_x) {
                        wx = false;
                        xw = "[A^" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + ", x^{" +
                             std::to_string(i + 1) + "," + std::to_string(g + 1) + "}]";
                    }
                    Element ed = A.commutator(Element::gen_d(ctx, i, g));
                    Element expect_d = (g == b) ? -Element::gen_d(ctx, i, a) : Element::zero(ctx);
                    if (ed != expect_d) {
                        wd = false;
                        dw = "[A^" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + ", d_{" +
                             std::to_string(i + 1) + "," + std::to_string(g + 1) + "}]";
                    }
                }
            }
            for (int g = 0; g < N; ++g)
                for (int r = 0; r < N; ++r) {
                    Element lhs = A.commutator(glN_generator(ctx, g, r));
                    Element rhs = Element::zero(ctx);
                    if (r == a) rhs += glN_generator(ctx, g, b);
                    if (b == g) rhs -= glN_generator(ctx, a, r);
                    if (lhs != rhs) {
                        waa = false;
                        aw = "[A^" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + ", A^" +
                             std::to_string(g + 1) + "_" + std::to_string(r + 1) + "]";
                    }
                }
        }
    rep.add("[A, h] = 0", wh);
    rep.add("[A, x] delta pattern", wx, xw);
    rep.add("[A, d] delta pattern", wd, dw);
    rep.add("glN commutator", waa, aw);

    // the commutators of the diagonal M with coordinates
    RatFunc one = c.rf(1);
    for (int i = 0; i < n && wm; ++i)
        for (int j = 0; j < n && wm; ++j) {
            if (i == j) continue;
            for (int a = 0; a < N && wm; ++a) {
                // [M^j_j, x^{ia}] = sum_b dbar_{jb} x^{ja} x^{ib} (1/h_ji)
                Element lhs = m_generator(ctx, j, j).commutator(Element::gen_x(ctx, i, a));
                Element rhs = Element::zero(ctx);
                for (int b = 0; b < N; ++b)
                    rhs += Element::word(ctx, OrderTag::DerFirst,
                                         {Gen{true, j, b}, Gen{false, j, a}, Gen{false, i, b}})
                               .times_coeff_right(one / c.hdiff(j, i));
                if (lhs != rhs) {
                    wm = false;
                    mw = "[M^" + std::to_string(j + 1) + "_" + std::to_string(j + 1) + ", x^{" +
                         std::to_string(i + 1) + "," + std::to_string(a + 1) + "}]";
                }
                // [M^i_i, x^{ia}] = -sum_b sum_{j!=i} dbar_{jb} x^{ja} x^{ib} (1/h_ji) + x^{ia}
                Element lhs2 = m_generator(ctx, i, i).commutator(Element::gen_x(ctx, i, a));
                Element rhs2 = Element::gen_x(ctx, i, a);
                for (int jj = 0; jj < n; ++jj) {
                    if (jj == i) continue;
                    for (int b = 0; b < N; ++b)
                        rhs2 -= Element::word(ctx, OrderTag::DerFirst,
                                              {Gen{true, jj, b}, Gen{false, jj, a}, Gen{false, i, b}})
                                    .times_coeff_right(one / c.hdiff(jj, i));
                }
                if (lhs2 != rhs2) {
                    wm = false;
                    mw = "[M^" + std::to_string(i + 1) + "_" + std::to_string(i + 1) + ", x^{" +
                         std::to_string(i + 1) + "," + std::to_string(a + 1) + "}]";
                }
            }
        }
    rep.add("M diagonal commutators", wm, mw);
    return rep;
}

QuadCenterResult quadratic_center_scan(Element::Ctx ctx, int degree_bound, bool with_denominators) {
    const RingCtx& c = *ctx;
    VarSpec spec = c.spec();
    int n = c.n(), N = c.copies();

    // coefficient space: monomials of degree <= D, optionally divided by a
    // single difference factor
    std::vector<RatFunc> basis;
    std::vector<Mono> monos;
    {
        // enumerate monomials in the Cartan block of degree <= degree_bound
        Mono m(spec.size(), 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == spec.nshift) {
                monos.push_back(m);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                m[var] = e;
                rec(var + 1, left - e);
            }
            m[var] = 0;
        };
        rec(0, degree_bound);
    }
    for (auto& m : monos) {
        MPoly p(spec);
        p.set_coeff(m, Rat(1));
        basis.push_back(RatFunc(p));
    }
    if (with_denominators) {
        size_t plain = basis.size();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                RatFunc den(hdiff_diff(spec, i, j));
                for (size_t b = 0; b < plain; ++b) {
                    // numerators free of h_i keep the family linearly
                    // independent from the polynomial block
                    if (basis[b].num().degree() >= degree_bound) continue;
                    if (basis[b].num().degree_in(i) > 0) continue;
                    basis.push_back(basis[b] / den);
                }
            }
    }

    int B = (int)basis.size();
    int unknowns = (n + 1) * B;  // f_1..f_n then g
    // linear pieces of [C, x^{ia}]
    std::vector<Element> xs;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < N; ++a) xs.push_back(Element::gen_x(ctx, i, a));

    RatLinearSystem sys(unknowns);
    for (auto& x : xs) {
        // collect commutator elements per unknown
        std::vector<Element> pieces;
        pieces.reserve(unknowns);
        for (int i = 0; i < n; ++i) {
            Element Mi = m_generator(ctx, i, i);
            for (int b = 0; b < B; ++b)
                pieces.push_back(Mi.times_coeff_right(basis[b]).commutator(x));
        }
        for (int b = 0; b < B; ++b)
            pieces.push_back(Element::coefficient(ctx, basis[b]).commutator(x));
        // stack equations per normal monomial
        std::map<Element::Key, bool> keys;
        for (auto& p : pieces)
            for (auto& [m, cc] : p.terms()) keys[m] = true;
        for (auto& [m, unused] : keys) {
            std::vector<RatFunc> row;
            row.reserve(unknowns);
            for (auto& p : pieces) {
                auto it = p.terms().find(m);
                row.push_back(it == p.terms().end() ? RatFunc(spec) : it->second);
            }
            sys.add(row, RatFunc(spec));
        }
    }

    QuadCenterResult out;
    auto kern = sys.kernel();
    for (auto& v : kern) {
        Element C = Element::zero(ctx);
        bool touches_bound = false;
        for (int i = 0; i < n; ++i) {
            RatFunc fi(spec);
            for (int b = 0; b < B; ++b)
                if (sgn(v[i * B + b]) != 0) {
                    fi += basis[b] * RatFunc::constant(spec, v[i * B + b]);
                    if (basis[b].num().degree() >= degree_bound) touches_bound = true;
                }
            if (!fi.is_zero()) C += m_generator(ctx, i, i).times_coeff_right(fi);
        }
        RatFunc g(spec);
        for (int b = 0; b < B; ++b)
            if (sgn(v[n * B + b]) != 0) {
                g += basis[b] * RatFunc::constant(spec, v[n * B + b]);
                if (basis[b].num().degree() >= degree_bound) touches_bound = true;
            }
        if (!g.is_zero()) C += Element::coefficient(ctx, g);
        if (touches_bound) out.bound_limited = true;
        out.basis.push_back(C);
    }
    out.dim_mod_constants = (int)out.basis.size() - 1;  // the constant solution g = const
    return out;
}

bool element_in_span(const Element& target, const std::vector<Element>& span) {
    if (span.empty()) return target.is_zero();
    VarSpec spec = target.ctx()->spec();
    RatLinearSystem sys((int)span.size());
    std::map<Element::Key, bool> keys;
    for (auto& [m, cc] : target.terms()) keys[m] = true;
    for (auto& e : span)
        for (auto& [m, cc] : e.terms()) keys[m] = true;
    for (auto& [m, unused] : keys) {
        std::vector<RatFunc> row;
        for (auto& e : span) {
            auto it = e.terms().find(m);
            row.push_back(it == e.terms().end() ? RatFunc(spec) : it->second);
        }
        auto it = target.terms().find(m);
        sys.add(row, it == target.terms().end() ? RatFunc(spec) : it->second);
    }
    auto sol = sys.solve();
    if (!sol) return false;
    // verify (solve() does not check free columns)
    Element acc = Element::zero(target.ctx(), target.tag());
    for (size_t i = 0; i < span.size(); ++i)
        acc += span[i].scaled(RatFunc::constant(spec, (*sol)[i]));
    return acc == target;
}

}  // namespace hdiff
