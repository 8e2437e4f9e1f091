#include "hdiff/families.hpp"

#include <algorithm>

namespace hdiff {

MPoly hdiff_var(VarSpec spec, int i) { return MPoly::variable(spec, i); }

MPoly hdiff_diff(VarSpec spec, int i, int j) {
    return MPoly::variable(spec, i) - MPoly::variable(spec, j);
}

MPoly elementary_sym(VarSpec spec, int n, int k) {
    if (k < 0 || k > n) throw Error("elementary_sym: index out of range");
    // coefficient of t^k in prod (1 + h_i t)
    std::vector<MPoly> e(k + 1, MPoly::zero(spec));
    e[0] = MPoly::constant(spec, 1);
    for (int i = 0; i < n; ++i) {
        MPoly hi = hdiff_var(spec, i);
        for (int d = std::min(i + 1, k); d >= 1; --d) e[d] += e[d - 1] * hi;
    }
    return e[k];
}

MPoly complete_sym(VarSpec spec, int n, int k) {
    if (k < 0) throw Error("complete_sym: negative index");
    // H_d(x_1..x_m) built by adding one variable at a time.
    std::vector<MPoly> H(k + 1, MPoly::zero(spec));
    H[0] = MPoly::constant(spec, 1);
    for (int i = 0; i < n; ++i) {
        MPoly hi = hdiff_var(spec, i);
        for (int d = 1; d <= k; ++d) H[d] += H[d - 1] * hi;
    }
    return H[k];
}

MPoly chi_poly(VarSpec spec, int n, int i) {
    MPoly p = MPoly::constant(spec, 1);
    for (int s = 0; s < n; ++s)
        if (s != i) p = p * hdiff_diff(spec, i, s);
    return p;
}

MPoly psi_poly(VarSpec spec, int n, int i) {
    MPoly p = MPoly::constant(spec, 1);
    for (int s = i + 1; s < n; ++s) p = p * hdiff_diff(spec, i, s);
    return p;
}

MPoly psi_prime_poly(VarSpec spec, int /*n*/, int i) {
    MPoly p = MPoly::constant(spec, 1);
    for (int s = 0; s < i; ++s) p = p * hdiff_diff(spec, i, s);
    return p;
}

RatFunc phi_func(VarSpec spec, int n, int i) {
    RatFunc r = RatFunc::constant(spec, 1);
    for (int s = i + 1; s < n; ++s) {
        RatFunc d(hdiff_diff(spec, i, s));
        r = r * d / (d - RatFunc::constant(spec, 1));
    }
    return r;
}

std::vector<MPoly> elementary_gen(VarSpec spec, int n) {
    std::vector<MPoly> e(n + 1, MPoly::zero(spec));
    for (int k = 0; k <= n; ++k) e[k] = elementary_sym(spec, n, k);
    return e;
}

std::vector<MPoly> elementary_gen_skip(VarSpec spec, int n, int i) {
    std::vector<MPoly> e(std::max(n, 1), MPoly::zero(spec));
    e[0] = MPoly::constant(spec, 1);
    int used = 0;
    for (int s = 0; s < n; ++s) {
        if (s == i) continue;
        MPoly hs = hdiff_var(spec, s);
        ++used;
        for (int d = std::min(used, n - 1); d >= 1; --d) e[d] += e[d - 1] * hs;
    }
    return e;
}

RatFunc finite_difference(const RatFunc& f, int j) {
    return f - f.shift_one(j, -1);
}

RatFunc named_family(VarSpec spec, int n, FamilyKind kind, int index) {
    switch (kind) {
        case FamilyKind::ElementaryE: return RatFunc(elementary_sym(spec, n, index));
        case FamilyKind::CompleteH: return RatFunc(complete_sym(spec, n, index));
        case FamilyKind::Chi: return RatFunc(chi_poly(spec, n, index));
        case FamilyKind::Psi: return RatFunc(psi_poly(spec, n, index));
        case FamilyKind::PsiPrime: return RatFunc(psi_prime_poly(spec, n, index));
        case FamilyKind::Phi: return phi_func(spec, n, index);
    }
    throw Error("named_family: bad kind");
}

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
    // exact rational roots of sum coeffs[d] x^d
    std::vector<Rat> out;
    int deg = (int)coeffs.size() - 1;
    while (deg >= 0 && sgn(coeffs[deg]) == 0) --deg;
    if (deg <= 0) return out;
    std::vector<Rat> c(coeffs.begin(), coeffs.begin() + deg + 1);
    // strip zero roots
    size_t low = 0;
    while (low < c.size() && sgn(c[low]) == 0) ++low;
    for (size_t i = 0; i < low; ++i) out.push_back(Rat(0));
    c.erase(c.begin(), c.begin() + low);
    if (c.size() <= 1) return out;
    // clear denominators
    mpz_class L(1);
    for (auto& r : c) {
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), L.get_mpz_t(), r.get_den().get_mpz_t());
        L = g;
    }
    std::vector<mpz_class> ic;
    for (auto& r : c) ic.push_back(mpz_class(r * Rat(L)));
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> ds;
        v = abs(v);
        if (v == 0) return ds;
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        }
        return ds;
    };
    auto p_divs = divisors(ic.front());
    auto q_divs = divisors(ic.back());
    auto eval = [&](const Rat& x) {
        Rat acc(0);
        for (int d = (int)ic.size() - 1; d >= 0; --d) acc = acc * x + Rat(ic[d]);
        return acc;
    };
    std::vector<Rat> cands;
    for (auto& p : p_divs)
        for (auto& q : q_divs) {
            Rat r(p, q);
            r.canonicalize();
            cands.push_back(r);
            cands.push_back(-r);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (auto& x : cands)
        if (sgn(eval(x)) == 0) out.push_back(x);
    return out;
}

LinearSplit split_cartan_linears(const MPoly& p, int n) {
    LinearSplit out;
    out.residual = p.primitive();
    VarSpec spec = p.spec();
    auto record = [&](int i, int j, long k) {
        for (auto& t : out.factors) {
            if (std::get<0>(t) == i && std::get<1>(t) == j && std::get<2>(t) == k) {
                ++std::get<3>(t);
                return;
            }
        }
        out.factors.emplace_back(i, j, k, 1);
    };
    bool progress = true;
    while (progress && !out.residual.is_constant()) {
        progress = false;
        for (int i = 0; i < n && !progress; ++i) {
            for (int j = i + 1; j < n && !progress; ++j) {
                if (out.residual.degree_in(i) < 1 || out.residual.degree_in(j) < 1) continue;
                // Candidates k come from integer roots of the residual viewed
                // along h_i with all other variables evaluated at a point that
                // keeps the h_i-degree. Every true factor h_i-h_j+k shows up
                // among them; each candidate is verified by exact division.
                bool probed = false;
                for (int attempt = 0; attempt < 8 && !probed; ++attempt) {
                    std::vector<std::pair<int, Rat>> assign;
                    Rat hj_val;
                    for (int v = 0; v < spec.size(); ++v) {
                        if (v == i) continue;
                        Rat val = Rat(attempt * 17 + 5) + Rat(31 * v + 7, attempt + 1);
                        assign.emplace_back(v, val);
                        if (v == j) hj_val = val;
                    }
                    MPoly uni = out.residual.subst_scalars(assign);
                    if (uni.degree_in(i) != out.residual.degree_in(i)) continue;
                    probed = true;
                    std::vector<Rat> coeffs(uni.degree_in(i) + 1, Rat(0));
                    for (auto& [m, c] : uni.terms()) coeffs[m[i]] += c;
                    for (auto& root : rational_roots(coeffs)) {
                        Rat k = hj_val - root;  // factor h_i - h_j + k has root h_i = hj_val - k
                        if (k.get_den() != 1) continue;
                        MPoly factor = hdiff_diff(spec, i, j) + MPoly::constant(spec, k);
                        while (true) {
                            auto q = out.residual.divide_exact(factor);
                            if (!q) break;
                            out.residual = *q;
                            record(i, j, (long)k.get_num().get_si());
                            progress = true;
                        }
                    }
                }
                if (!probed) {
                    out.probe_failed = true;
                    return out;
                }
            }
        }
    }
    out.residual = out.residual.primitive();
    return out;
}

UbarLedger ubar_membership(const RatFunc& f, int n) {
    UbarLedger led;
    for (auto& [fac, mult] : f.den_factors()) {
        LinearSplit sp = split_cartan_linears(fac, n);
        if (sp.probe_failed) {
            led.status = UbarLedger::Status::Indeterminate;
            led.witness = sp.residual;
            return led;
        }
        if (!sp.complete_to_constant()) {
            // a non-conforming irreducible-ish factor: if it still depends on
            // the Cartan block it is certainly outside the multiplicative set
            led.status = UbarLedger::Status::Outside;
            led.witness = sp.residual;
            return led;
        }
        for (auto& [i, j, k, m] : sp.factors) {
            bool merged = false;
            for (auto& t : led.factors) {
                if (std::get<0>(t) == i && std::get<1>(t) == j && std::get<2>(t) == k) {
                    std::get<3>(t) += m * mult;
                    merged = true;
                    break;
                }
            }
            if (!merged) led.factors.emplace_back(i, j, k, m * mult);
        }
    }
    std::sort(led.factors.begin(), led.factors.end());
    return led;
}

}  // namespace hdiff
