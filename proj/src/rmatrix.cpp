#include "hdiff/rmatrix.hpp"

#include <sstream>

namespace hdiff {

namespace {
std::string idx4(int i, int j, int k, int l) {
    std::ostringstream os;
    os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << ")";
    return os.str();
}
}  // namespace

RatFunc ROperator::entry(int i, int j, int k, int l) const {
    auto it = e_.find({i, j, k, l});
    if (it == e_.end()) return RatFunc(spec_);
    return it->second;
}

void ROperator::set(int i, int j, int k, int l, const RatFunc& v) {
    if (v.is_zero()) e_.erase({i, j, k, l});
    else e_[{i, j, k, l}] = v;
}

ROperator rhat(int n, VarSpec spec) {
    ROperator r(n, spec);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                RatFunc hij(hdiff_diff(spec, i, j));
                r.set(i, j, i, j, RatFunc::constant(spec, 1) / hij);
                if (i < j) {
                    r.set(i, j, j, i, (hij * hij - RatFunc::constant(spec, 1)) / (hij * hij));
                } else {
                    r.set(i, j, j, i, RatFunc::constant(spec, 1));
                }
            } else {
                r.set(i, i, i, i, RatFunc::constant(spec, 1));
            }
        }
    }
    return r;
}

ROperator rhat(int n) { return rhat(n, VarSpec{n, 0}); }

ROperator psi_skew(int n, VarSpec spec) {
    ROperator p(n, spec);
    auto chi = [&](int i) { return RatFunc(chi_poly(spec, n, i)); };
    auto Q = [&](int i, int sign) { return chi(i).shift_one(i, sign) / chi(i); };
    RatFunc one = RatFunc::constant(spec, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RatFunc hij(hdiff_diff(spec, i, j));
            RatFunc diag = Q(i, +1) * Q(j, -1) / (hij + one);
            if (i == j) {
                p.set(i, i, i, i, diag);
            } else {
                p.set(i, j, i, j, diag);
                if (i < j) {
                    p.set(i, j, j, i, one);
                } else {
                    RatFunc num = (hij - one) * (hij - one);
                    p.set(i, j, j, i, num / (hij * (hij - RatFunc::constant(spec, 2))));
                }
            }
        }
    }
    return p;
}

ROperator psi_skew(int n) { return psi_skew(n, VarSpec{n, 0}); }

Report check_r_properties(const ROperator& r, const ROperator& psi) {
    Report rep;
    int n = r.n();
    VarSpec spec = r.spec();
    if (n < 2) {
        rep.add("rhat_squared_id", true);
        rep.add("shift_invariance", true);
        rep.add("ice_condition", true);
        rep.add("skew_inverse", true);
        rep.add("dybe", true);
        return rep;
    }

    // R^2 = Id
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    for (int l = 0; l < n && ok; ++l) {
                        RatFunc sum(spec);
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b) {
                                RatFunc r1 = r.entry(i, j, a, b);
                                if (r1.is_zero()) continue;
                                RatFunc r2 = r.entry(a, b, k, l);
                                if (r2.is_zero()) continue;
                                sum += r1 * r2;
                            }
                        RatFunc expect = (i == k && j == l) ? RatFunc::constant(spec, 1) : RatFunc(spec);
                        if (sum != expect) {
                            ok = false;
                            wit = idx4(i, j, k, l);
                        }
                    }
        rep.add("rhat_squared_id", ok, wit);
    }

    // entrywise shift invariance under eps_i + eps_j
    {
        bool ok = true;
        std::string wit;
        for (auto& [key, v] : r.entries()) {
            auto [i, j, k, l] = key;
            std::vector<int> sv(spec.nshift, 0);
            sv[i] += 1;
            sv[j] += 1;
            if (v.shift(sv) != v) {
                ok = false;
                wit = idx4(i, j, k, l);
                break;
            }
        }
        rep.add("shift_invariance", ok, wit);
    }

    // ice condition
    {
        bool ok = true;
        std::string wit;
        for (auto& [key, v] : r.entries()) {
            auto [i, j, k, l] = key;
            bool match = (k == i && l == j) || (k == j && l == i);
            if (!match && !v.is_zero()) {
                ok = false;
                wit = idx4(i, j, k, l);
                break;
            }
        }
        rep.add("ice_condition", ok, wit);
    }

    // skew inverse: sum_{k,l} Psi^{ik}_{jl} Rhat^{ml}_{nk}[eps_m] = delta^i_n delta^m_j
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int m = 0; m < n && ok; ++m)
                    for (int nn = 0; nn < n && ok; ++nn) {
                        RatFunc sum(spec);
                        for (int k = 0; k < n; ++k)
                            for (int l = 0; l < n; ++l) {
                                RatFunc p1 = psi.entry(i, k, j, l);
                                if (p1.is_zero()) continue;
                                RatFunc r1 = r.entry(m, l, nn, k);
                                if (r1.is_zero()) continue;
                                sum += p1 * r1.shift_one(m, +1);
                            }
                        RatFunc expect = (i == nn && m == j) ? RatFunc::constant(spec, 1) : RatFunc(spec);
                        if (sum != expect) {
                            ok = false;
                            wit = idx4(i, j, m, nn);
                        }
                    }
        rep.add("skew_inverse", ok, wit);
    }

    // dynamical Yang-Baxter equation
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    for (int m = 0; m < n && ok; ++m)
                        for (int nn = 0; nn < n && ok; ++nn)
                            for (int rr = 0; rr < n && ok; ++rr) {
                                RatFunc lhs(spec), rhs(spec);
                                for (int a = 0; a < n; ++a)
                                    for (int b = 0; b < n; ++b) {
                                        RatFunc r1 = r.entry(i, j, a, b);
                                        if (!r1.is_zero())
                                            for (int u = 0; u < n; ++u) {
                                                RatFunc r2 = r.entry(b, k, u, rr);
                                                if (r2.is_zero()) continue;
                                                RatFunc r3 = r.entry(a, u, m, nn);
                                                if (r3.is_zero()) continue;
                                                lhs += r1 * r2.shift_one(a, -1) * r3;
                                            }
                                        RatFunc s1 = r.entry(j, k, a, b);
                                        if (!s1.is_zero())
                                            for (int u = 0; u < n; ++u) {
                                                RatFunc s2 = r.entry(i, a, m, u);
                                                if (s2.is_zero()) continue;
                                                RatFunc s3 = r.entry(u, b, nn, rr);
                                                if (s3.is_zero()) continue;
                                                rhs += s1.shift_one(i, -1) * s2 * s3.shift_one(m, -1);
                                            }
                                    }
                                if (lhs != rhs) {
                                    ok = false;
                                    std::ostringstream os;
                                    os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ";" << m + 1
                                       << "," << nn + 1 << "," << rr + 1 << ")";
                                    wit = os.str();
                                }
                            }
        rep.add("dybe", ok, wit);
    }
    return rep;
}

Report check_r_properties(int n) {
    VarSpec spec{n, 0};
    return check_r_properties(rhat(n, spec), psi_skew(n, spec));
}

}  // namespace hdiff
