#include "hdiff/consistency.hpp"

#include <sstream>

#include "hdiff/rmatrix.hpp"

namespace hdiff {

// ---------------------------------------------------------------- UniRat

UniRat UniRat::poly(const std::vector<Rat>& coeffs) {
    MPoly p(tspec());
    for (size_t d = 0; d < coeffs.size(); ++d)
        p += MPoly::variable(tspec(), 0, (int)d) * coeffs[d];
    return UniRat{RatFunc(p)};
}

UniRat UniRat::poly_part() const {
    if (f.is_polynomial()) return *this;
    MPoly den = f.den_expanded();
    auto nc = f.num().univariate_in(0);
    auto dc = den.univariate_in(0);
    int dn = (int)nc.size() - 1, dd = (int)dc.size() - 1;
    if (dn < dd) return UniRat{RatFunc(tspec())};
    // long division of coefficient vectors (entries are rationals here)
    std::vector<Rat> num(dn + 1), dv(dd + 1), q(dn - dd + 1, Rat(0));
    for (int i = 0; i <= dn; ++i) num[i] = nc[i].is_zero() ? Rat(0) : nc[i].constant_value();
    for (int i = 0; i <= dd; ++i) dv[i] = dc[i].is_zero() ? Rat(0) : dc[i].constant_value();
    for (int d = dn; d >= dd; --d) {
        Rat c = num[d] / dv[dd];
        q[d - dd] = c;
        for (int k = 0; k <= dd; ++k) num[d - dd + k] -= c * dv[k];
    }
    return poly(q);
}

std::vector<Rat> UniRat::poly_coeffs() const {
    if (!f.is_polynomial()) throw Error("UniRat::poly_coeffs: not a polynomial");
    auto cs = f.num().univariate_in(0);
    std::vector<Rat> out;
    for (auto& c : cs) out.push_back(c.is_zero() ? Rat(0) : c.constant_value());
    return out;
}

RatFunc UniRat::at_site(VarSpec spec, int k) const {
    return f.subst({{0, MPoly::variable(spec, k)}}, spec);
}

std::string UniRat::str() const {
    VarNames vn;
    vn.names.push_back("t");
    return f.str(vn);
}

// -------------------------------------------------------------- SigmaSpec

SigmaSpec SigmaSpec::complete_h(int n, int m, const Rat& coeff) {
    SigmaSpec s;
    s.n = n;
    s.site.assign(n, UniRat::zero());
    s.hpart.assign(m + 1, Rat(0));
    s.hpart[m] = coeff;
    return s;
}

SigmaSpec SigmaSpec::from_sites(int n, std::vector<UniRat> site_parts) {
    SigmaSpec s;
    s.n = n;
    s.site = std::move(site_parts);
    s.site.resize(n, UniRat::zero());
    s.canonicalize();
    return s;
}

RatFunc SigmaSpec::realize(VarSpec spec) const {
    RatFunc out(spec);
    for (int k = 0; k < n; ++k) {
        if (site[k].is_zero()) continue;
        out += site[k].at_site(spec, k) / RatFunc(chi_poly(spec, n, k));
    }
    for (size_t m = 0; m < hpart.size(); ++m) {
        if (sgn(hpart[m]) == 0) continue;
        out += RatFunc(complete_sym(spec, n, (int)m)) * RatFunc::constant(spec, hpart[m]);
    }
    return out;
}

std::vector<RatFunc> SigmaSpec::sigmas(VarSpec spec) const {
    RatFunc pot = realize(spec);
    std::vector<RatFunc> out;
    for (int i = 0; i < n; ++i) out.push_back(finite_difference(pot, i));
    return out;
}

UniRat SigmaSpec::full_site(int k) const {
    UniRat u = site[k];
    std::vector<Rat> extra;
    for (size_t m = 0; m < hpart.size(); ++m) {
        if (sgn(hpart[m]) == 0) continue;
        extra.resize(std::max(extra.size(), m + (size_t)n), Rat(0));
        extra[m + n - 1] += hpart[m];
    }
    return u + UniRat::poly(extra);
}

void SigmaSpec::canonicalize() {
    if ((int)site.size() != n) site.resize(n, UniRat::zero());
    // mean of the polynomial components of the site parts
    UniRat mean = UniRat::zero();
    for (auto& s : site) mean = mean + s.poly_part();
    mean = mean.scaled(Rat(1, n));
    std::vector<Rat> mc = mean.poly_coeffs();
    for (auto& s : site) s = s - mean;
    // degree <= n-2 of the shared part is pure gauge; higher degrees move to H
    for (size_t d = 0; d < mc.size(); ++d) {
        if ((int)d >= n - 1 && sgn(mc[d]) != 0) {
            size_t m = d - (size_t)(n - 1);
            if (hpart.size() <= m) hpart.resize(m + 1, Rat(0));
            hpart[m] += mc[d];
        }
    }
    while (!hpart.empty() && sgn(hpart.back()) == 0) hpart.pop_back();
}

bool SigmaSpec::is_symmetric_polynomial() const {
    for (auto& s : site)
        if (!s.is_zero()) return false;
    return true;
}

std::string SigmaSpec::str() const {
    std::ostringstream os;
    os << "{sites: [";
    for (int k = 0; k < n; ++k) {
        if (k) os << ", ";
        os << site[k].str();
    }
    os << "], H: [";
    for (size_t m = 0; m < hpart.size(); ++m) {
        if (m) os << ", ";
        os << to_string(hpart[m]);
    }
    os << "]}";
    return os.str();
}

// ------------------------------------------------------------ Delta system

std::vector<std::vector<RatFunc>> delta_system_residual(const std::vector<RatFunc>& sigmas) {
    int n = (int)sigmas.size();
    VarSpec spec = sigmas[0].spec();
    std::vector<std::vector<RatFunc>> r(n, std::vector<RatFunc>(n, RatFunc(spec)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            r[i][j] = RatFunc(hdiff_diff(spec, i, j)) * finite_difference(sigmas[i], j) -
                      (sigmas[i] - sigmas[j]);
        }
    return r;
}

bool delta_system_holds(const RatFunc& f, int n, std::pair<int, int>* witness) {
    VarSpec spec = f.spec();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RatFunc g = RatFunc(hdiff_diff(spec, i, j)) * f;
            if (!finite_difference(finite_difference(g, i), j).is_zero()) {
                if (witness) *witness = {i, j};
                return false;
            }
        }
    return true;
}

// ------------------------------------------------------------- decompose

namespace {

// rational function of a single Cartan variable -> univariate form
UniRat to_unirat(const RatFunc& f, int var) {
    for (int v = 0; v < f.spec().size(); ++v) {
        if (v == var) continue;
        if (f.num().degree_in(v) > 0) throw Error("to_unirat: not univariate");
        for (auto& [fac, m] : f.den_factors())
            if (fac.degree_in(v) > 0) throw Error("to_unirat: not univariate");
    }
    return UniRat{f.subst({{var, MPoly::variable(UniRat::tspec(), 0)}}, UniRat::tspec())};
}

}  // namespace

DecomposeResult w_decompose(const RatFunc& sigma, int n) {
    DecomposeResult out;
    VarSpec spec = sigma.spec();
    std::pair<int, int> wit;
    if (!delta_system_holds(sigma, n, &wit)) {
        out.in_wbar = false;
        out.witness = wit;
        return out;
    }
    out.in_wbar = true;
    if (n == 1) {
        try {
            out.spec = SigmaSpec::from_sites(1, {to_unirat(sigma, 0)});
        } catch (const Error& e) {
            out.in_wbar = false;
            out.note = e.what();
        }
        return out;
    }

    int q = n - 1;  // reference site
    std::vector<UniRat> bar(n, UniRat::zero());
    for (int k = 0; k < q; ++k) {
        // residue along h_k - h_q recovers pi_k - pi_q
        try {
            RatFunc r = RatFunc(hdiff_diff(spec, k, q)) * sigma;
            RatFunc rs = r.subst({{k, MPoly::variable(spec, q)}}, spec);
            MPoly prod = MPoly::constant(spec, 1);
            for (int s = 0; s < n; ++s)
                if (s != k && s != q) prod = prod * hdiff_diff(spec, q, s);
            bar[k] = to_unirat(rs * RatFunc(prod), q);
        } catch (const Error& e) {
            out.in_wbar = false;
            out.note = std::string("residue extraction: ") + e.what();
            return out;
        }
    }

    RatFunc rho = sigma;
    for (int k = 0; k < q; ++k)
        rho -= bar[k].at_site(spec, k) / RatFunc(chi_poly(spec, n, k));

    // shared part: specialize every variable but h_0 and clear the chi factor
    UniRat shared = UniRat::zero();
    bool got = false;
    for (int attempt = 0; attempt < 12 && !got; ++attempt) {
        try {
            std::vector<std::pair<int, MPoly>> assign;
            std::vector<Rat> cs(n);
            for (int j = 1; j < n; ++j) {
                cs[j] = Rat(100 * j + 13 * attempt + 7, 3);
                assign.emplace_back(j, MPoly::constant(spec, cs[j]));
            }
            RatFunc ev = rho.subst(assign, spec);
            MPoly prod = MPoly::constant(spec, 1);
            for (int j = 1; j < n; ++j)
                prod = prod * (hdiff_var(spec, 0) - MPoly::constant(spec, cs[j]));
            shared = to_unirat(ev * RatFunc(prod), 0);
            got = true;
        } catch (const Error&) {
            continue;
        }
    }
    if (!got) {
        out.in_wbar = false;
        out.note = "shared-part extraction failed at every probe point";
        return out;
    }

    std::vector<UniRat> sites;
    for (int k = 0; k < n; ++k) sites.push_back(bar[k] + shared);
    out.spec = SigmaSpec::from_sites(n, sites);

    if (out.spec.realize(spec) != sigma) {
        out.in_wbar = false;
        out.note = "decomposition does not reproduce the input";
    }
    return out;
}

// ------------------------------------------------- discrete antiderivative

std::optional<RatFunc> discrete_antiderivative(const RatFunc& g, int i) {
    VarSpec spec = g.spec();
    // split denominator into h_i-free and h_i-dependent parts
    MPoly den_free = MPoly::constant(spec, 1);
    bool has_dep = false;
    for (auto& [f, m] : g.den_factors()) {
        if (f.degree_in(i) == 0) {
            den_free = den_free * f.pow(m);
        } else {
            has_dep = true;
        }
    }

    if (!has_dep) {
        // polynomial in h_i over h_i-free coefficients: triangular solve
        auto cs = g.num().univariate_in(i);
        int D = (int)cs.size() - 1;
        std::vector<MPoly> target = cs;
        std::vector<MPoly> b(D + 2, MPoly::zero(spec));
        for (int d = D; d >= 0; --d) {
            // b_{d+1} (h^{d+1} - (h-1)^{d+1}) contributes (d+1) b_{d+1} h^d + lower
            b[d + 1] = target[d] * Rat(1, d + 1);
            MPoly hpow = MPoly::variable(spec, i, d + 1);
            MPoly diff = hpow - hpow.shift([&] {
                std::vector<int> v(spec.nshift, 0);
                v[i] = -1;
                return v;
            }());
            MPoly contrib = b[d + 1] * diff;
            auto cc = contrib.univariate_in(i);
            for (int e = 0; e <= d && e < (int)cc.size(); ++e) {
                if ((int)target.size() <= e) target.resize(e + 1, MPoly::zero(spec));
                target[e] -= cc[e];
            }
        }
        MPoly F(spec);
        for (int d = 0; d <= D + 1; ++d) F += b[d] * MPoly::variable(spec, i, d);
        RatFunc out = RatFunc(F, den_free);
        if (finite_difference(out, i) != g) return std::nullopt;
        return out;
    }

    // rational case: linear ansatz over shifted copies of the pole factors
    std::vector<MPoly> pole_factors;
    int max_mult = 1;
    for (auto& [f, m] : g.den_factors()) {
        if (f.degree_in(i) == 0) continue;
        pole_factors.push_back(f);
        max_mult = std::max(max_mult, m);
    }
    const int K = 8;
    std::vector<std::pair<MPoly, int>> basis;  // factor^mult in the candidate denominator
    for (auto& f : pole_factors) {
        for (int k = -K; k <= K; ++k) {
            std::vector<int> v(spec.nshift, 0);
            v[i] = k;
            MPoly fk = f.shift(v).primitive();
            bool seen = false;
            for (auto& [bf, bm] : basis)
                if (bf == fk) seen = true;
            if (!seen) basis.emplace_back(fk, max_mult);
        }
    }
    // unknowns: coefficient of 1/f^m for each basis factor and multiplicity
    std::vector<RatFunc> atoms;
    for (auto& [f, mm] : basis)
        for (int m = 1; m <= mm; ++m)
            atoms.push_back(RatFunc(MPoly::constant(spec, 1), f.pow(m)));
    // solve sum_a c_a Delta(atom_a) = g on cleared numerators; whatever is
    // left over goes through the polynomial branch
    std::vector<RatFunc> deltas;
    for (auto& a : atoms) deltas.push_back(finite_difference(a, i));
    MPoly bigden = MPoly::constant(spec, 1);
    {
        RatFunc::FactorMap all;
        auto merge = [&](const RatFunc& r) {
            for (auto& [f, m] : r.den_factors()) {
                auto it = all.find(f);
                if (it == all.end()) all[f] = m;
                else it->second = std::max(it->second, m);
            }
        };
        for (auto& d : deltas) merge(d);
        merge(g);
        for (auto& [f, m] : all) bigden = bigden * f.pow(m);
    }
    std::vector<MPoly> cols;
    for (auto& d : deltas) {
        RatFunc cleared = d * RatFunc(bigden);
        if (!cleared.is_polynomial()) return std::nullopt;
        cols.push_back(cleared.num());
    }
    RatFunc gc = g * RatFunc(bigden);
    if (!gc.is_polynomial()) return std::nullopt;
    MPoly rhs = gc.num();
    // collect monomials
    std::map<Mono, int, GrlexLess> rows;
    auto note_rows = [&](const MPoly& p) {
        for (auto& [m, c] : p.terms())
            if (!rows.count(m)) rows[m] = (int)rows.size();
    };
    for (auto& c : cols) note_rows(c);
    note_rows(rhs);
    int R = (int)rows.size(), C = (int)cols.size();
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C + 1, Rat(0)));
    for (int c = 0; c < C; ++c)
        for (auto& [m, v] : cols[c].terms()) A[rows[m]][c] = v;
    for (auto& [m, v] : rhs.terms()) A[rows[m]][C] = v;
    // Gaussian elimination; system may be unsolvable -> try remainder as polynomial
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < C && rank < R; ++c) {
        int p = -1;
        for (int r = rank; r < R; ++r)
            if (sgn(A[r][c]) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[rank]);
        Rat d = A[rank][c];
        for (int cc = 0; cc <= C; ++cc) A[rank][cc] /= d;
        for (int r = 0; r < R; ++r) {
            if (r == rank || sgn(A[r][c]) == 0) continue;
            Rat f = A[r][c];
            for (int cc = 0; cc <= C; ++cc) A[r][cc] -= f * A[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<Rat> sol(C, Rat(0));
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = A[r][C];
    RatFunc F(spec);
    for (int c = 0; c < C; ++c)
        if (sgn(sol[c]) != 0) F += atoms[c] * RatFunc::constant(spec, sol[c]);
    RatFunc rem = g - finite_difference(F, i);
    if (rem.is_zero()) return F;
    // leftover must be handled by the polynomial branch
    for (auto& [f, m] : rem.den_factors())
        if (f.degree_in(i) > 0) return std::nullopt;
    auto rest = discrete_antiderivative(rem, i);
    if (!rest) return std::nullopt;
    return F + *rest;
}

// --------------------------------------------------- potential from sigmas

namespace {

RatFunc potential_subset(const std::vector<RatFunc>& sig, std::vector<int> s);

RatFunc potential_single(const std::vector<RatFunc>& sig, int j) {
    int n = (int)sig.size();
    VarSpec spec = sig[0].spec();
    if (n == 1) {
        auto f = discrete_antiderivative(sig[0], 0);
        if (!f) throw Error("potential: sigma_1 is not a finite difference in h1");
        return *f;
    }
    int i = (j + 1) % n;
    return (RatFunc(hdiff_diff(spec, j, i)) + RatFunc::constant(spec, 1)) * sig[i];
}

RatFunc split_off_var(const RatFunc& f, int var) {
    // part of f independent of h_var: evaluation at a defined scalar
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rat mu(attempt * 7 + 3, 2);
        try {
            return f.subst({{var, MPoly::constant(f.spec(), mu)}}, f.spec());
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("potential: no evaluation point for gluing");
}

RatFunc potential_subset(const std::vector<RatFunc>& sig, std::vector<int> s) {
    if (s.size() == 1) return potential_single(sig, s[0]);
    int first = s.front();
    std::vector<int> s1(s.begin(), s.end() - 1);  // without the last index
    std::vector<int> s2(s.begin() + 1, s.end());  // without the first
    RatFunc F = potential_subset(sig, s1);
    RatFunc G = potential_subset(sig, s2);
    RatFunc u = split_off_var(F - G, first);
    return F - u;
}

}  // namespace

RatFunc potential_from_sigmas(const std::vector<RatFunc>& sigmas) {
    int n = (int)sigmas.size();
    if (n == 0) throw Error("potential: empty system");
    VarSpec spec = sigmas[0].spec();
    auto res = delta_system_residual(sigmas);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!res[i][j].is_zero())
                throw Error("potential: Delta-system violated at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    RatFunc f = potential_subset(sigmas, all);
    for (int i = 0; i < n; ++i) {
        if (finite_difference(f, i) != sigmas[i])
            throw Error("potential: sigma_" + std::to_string(i + 1) + " is not Delta_i of the glued potential");
    }
    // base-point normalization
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rat base(attempt, 1);
        try {
            std::vector<std::pair<int, MPoly>> assign;
            for (int i = 0; i < spec.nshift; ++i)
                assign.emplace_back(i, MPoly::constant(spec, base));
            RatFunc c = f.subst(assign, spec);
            f -= c;
            break;
        } catch (const Error&) {
            continue;
        }
    }
    return f;
}

bool zhelobenko_admissible(const SigmaSpec& s) { return s.is_symmetric_polynomial(); }

// ----------------------------------------------------------- PBW checking

namespace {

std::string word_witness(int i, int j, int k, int a, int b, int g, int N) {
    std::ostringstream os;
    if (N == 1) {
        os << "x^" << i + 1 << " d_" << j + 1 << " d_" << k + 1;
    } else {
        os << "x^{" << i + 1 << "," << a + 1 << "} d_{" << j + 1 << "," << b + 1 << "} d_{" << k + 1
           << "," << g + 1 << "}";
    }
    return os.str();
}

std::string xword_witness(int j, int k, int i, int a, int b, int g, int N) {
    std::ostringstream os;
    if (N == 1) {
        os << "x^" << j + 1 << " x^" << k + 1 << " d_" << i + 1;
    } else {
        os << "x^{" << j + 1 << "," << a + 1 << "} x^{" << k + 1 << "," << b + 1 << "} d_{" << i + 1
           << "," << g + 1 << "}";
    }
    return os.str();
}

}  // namespace

Report pbw_overlap_check(Element::Ctx ctx, PbwMode mode) {
    Report rep;
    const RingCtx& c = *ctx;
    int n = c.n(), N = c.copies();
    VarSpec spec = c.spec();
    ROperator R = rhat(n, spec);

    bool do_analytic = mode == PbwMode::Analytic || mode == PbwMode::Both;
    bool do_brute = mode == PbwMode::Bruteforce || mode == PbwMode::Both;

    // Overlap words have a reducible second pair; an ordered pair admits only
    // one reduction path and carries no ambiguity.
    auto d_pair_reducible = [&](int j, int be, int k, int ga) {
        return c.dslot(j, be) > c.dslot(k, ga);
    };
    auto x_pair_reducible = [&](int j, int al, int k, int be) {
        return c.xslot(j, al) > c.xslot(k, be);
    };

    bool a_ok = true;
    std::string a_wit;
    if (do_analytic) {
        for (int i = 0; i < n && a_ok; ++i)
            for (int j = 0; j < n && a_ok; ++j)
                for (int k = 0; k < n && a_ok; ++k)
                    for (int al = 0; al < N && a_ok; ++al)
                        for (int be = 0; be < N && a_ok; ++be)
                            for (int ga = 0; ga < N && a_ok; ++ga) {
                                if (!d_pair_reducible(j, be, k, ga)) continue;
                                for (int u = 0; u < n; ++u) {
                                    // A = R^{ui}_{kj} (sigma_{k,al,ga} - sigma_{i,al,ga}[-eps_u])
                                    RatFunc A = R.entry(u, i, k, j) *
                                                (c.sigma(k, al, ga) - c.sigma(i, al, ga).shift_one(u, -1));
                                    // B = delta delta sigma_{i,al,be}[-eps_u] - sum R R sigma_{a,al,be}
                                    RatFunc B(spec);
                                    if (i == j && u == k) B += c.sigma(i, al, be).shift_one(u, -1);
                                    for (int aa = 0; aa < n; ++aa)
                                        for (int bb = 0; bb < n; ++bb) {
                                            RatFunc r1 = R.entry(aa, bb, k, j);
                                            if (r1.is_zero()) continue;
                                            RatFunc r2 = R.entry(u, i, aa, bb);
                                            if (r2.is_zero()) continue;
                                            B -= r1 * r2 * c.sigma(aa, al, be);
                                        }
                                    bool fail = (be == ga) ? !(A + B).is_zero()
                                                           : (!A.is_zero() || !B.is_zero());
                                    if (fail) {
                                        a_ok = false;
                                        a_wit = word_witness(i, j, k, al, be, ga, N);
                                        break;
                                    }
                                }
                            }
        rep.add("pbw_analytic", a_ok, a_wit);
    }

    bool b_ok = true;
    std::string b_wit;
    if (do_brute) {
        for (int i = 0; i < n && b_ok; ++i)
            for (int j = 0; j < n && b_ok; ++j)
                for (int k = 0; k < n && b_ok; ++k)
                    for (int al = 0; al < N && b_ok; ++al)
                        for (int be = 0; be < N && b_ok; ++be)
                            for (int ga = 0; ga < N && b_ok; ++ga) {
                                if (!d_pair_reducible(j, be, k, ga)) continue;
                                Element x = Element::gen_x(ctx, i, al);
                                Element d1 = Element::gen_d(ctx, j, be);
                                Element d2 = Element::gen_d(ctx, k, ga);
                                if ((x * d1) * d2 != x * (d1 * d2)) {
                                    b_ok = false;
                                    b_wit = word_witness(i, j, k, al, be, ga, N);
                                }
                            }
        for (int j = 0; j < n && b_ok; ++j)
            for (int k = 0; k < n && b_ok; ++k)
                for (int i = 0; i < n && b_ok; ++i)
                    for (int al = 0; al < N && b_ok; ++al)
                        for (int be = 0; be < N && b_ok; ++be)
                            for (int ga = 0; ga < N && b_ok; ++ga) {
                                if (!x_pair_reducible(j, al, k, be)) continue;
                                Element x1 = Element::gen_x(ctx, j, al);
                                Element x2 = Element::gen_x(ctx, k, be);
                                Element d = Element::gen_d(ctx, i, ga);
                                if ((x1 * x2) * d != x1 * (x2 * d)) {
                                    b_ok = false;
                                    b_wit = xword_witness(j, k, i, al, be, ga, N);
                                }
                            }
        rep.add("pbw_bruteforce", b_ok, b_wit);
    }

    if (mode == PbwMode::Both) {
        bool agree = (a_ok == b_ok) && (a_ok || a_wit == b_wit);
        rep.add("modes_agree", agree, agree ? "" : a_wit + " vs " + b_wit);
    }
    return rep;
}

std::shared_ptr<const RingCtx> make_ring(int n, int N, const SigmaSpec& sigma) {
    VarSpec spec{n, 0};
    return std::make_shared<const RingCtx>(n, N, sigma.sigmas(spec), spec);
}

std::shared_ptr<const RingCtx> make_ring(int n, int N, const RatFunc& potential) {
    VarSpec spec = potential.spec();
    std::vector<RatFunc> sig;
    for (int i = 0; i < n; ++i) sig.push_back(finite_difference(potential, i));
    return std::make_shared<const RingCtx>(n, N, std::move(sig), spec);
}

SigmaSpec random_sigma_spec(uint64_t seed, int n, bool allow_rational_site) {
    // splitmix64 steps, kept local to stay reproducible
    auto next = [&seed]() {
        uint64_t z = (seed += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto pick = [&](int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); };
    SigmaSpec s;
    s.n = n;
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> coeffs;
        int deg = pick(0, n + 1);
        for (int d = 0; d <= deg; ++d) coeffs.push_back(Rat(pick(-4, 4)));
        UniRat u = UniRat::poly(coeffs);
        if (allow_rational_site && pick(0, 2) == 0) {
            // simple rational part c/(t - a)
            VarSpec ts = UniRat::tspec();
            RatFunc prop = RatFunc::constant(ts, Rat(pick(1, 3))) /
                           (RatFunc::variable(ts, 0) - RatFunc::constant(ts, Rat(pick(-2, 2))));
            u = u + UniRat{prop};
        }
        s.site.push_back(u);
    }
    int hm = pick(0, 2);
    s.hpart.assign(hm + 1, Rat(0));
    s.hpart[hm] = Rat(pick(-3, 3));
    s.canonicalize();
    return s;
}

}  // namespace hdiff
