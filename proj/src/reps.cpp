#include "hdiff/reps.hpp"

#include <algorithm>
#include <sstream>

namespace hdiff {

// ----------------------------------------------------------------- scalars

FVal fval(const Rat& r) { return FVal{r, Rat(0)}; }
bool fis_zero(const FVal& v) { return sgn(v.a) == 0 && sgn(v.b) == 0; }
FVal fadd(const FVal& u, const FVal& v) { return FVal{u.a + v.a, u.b + v.b}; }
FVal fsub(const FVal& u, const FVal& v) { return FVal{u.a - v.a, u.b - v.b}; }
FVal fneg(const FVal& u) { return FVal{-u.a, -u.b}; }

FVal fmul(const FieldSpec& fs, const FVal& u, const FVal& v) {
    // (a + b t)(c + d t) with t^2 = c1 t + c0
    Rat bd = u.b * v.b;
    return FVal{u.a * v.a + bd * fs.c0, u.a * v.b + u.b * v.a + bd * fs.c1};
}

FVal finv(const FieldSpec& fs, const FVal& u) {
    if (fis_zero(u)) throw Error("finv: zero");
    if (sgn(u.b) == 0) return FVal{Rat(1) / u.a, Rat(0)};
    if (!fs.quadratic) throw Error("finv: extension value in a rational field");
    // solve (a + b t)(x + y t) = 1
    Rat a = u.a, b = u.b;
    Rat det = a * (a + fs.c1 * b) - fs.c0 * b * b;
    if (sgn(det) == 0) throw Error("finv: reducible extension");
    return FVal{(a + fs.c1 * b) / det, -b / det};
}

std::string fstr(const FVal& v) {
    if (sgn(v.b) == 0) return to_string(v.a);
    std::string s = to_string(v.a) + (sgn(v.b) >= 0 ? "+" : "") + to_string(v.b) + "w";
    return s;
}

FMat FMat::identity(int d) {
    FMat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = fval(Rat(1));
    return m;
}

bool FMat::is_zero() const {
    for (auto& v : e)
        if (!fis_zero(v)) return false;
    return true;
}

FMat madd(const FMat& a, const FMat& b) {
    FMat r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = fadd(r.e[i], b.e[i]);
    return r;
}

FMat msub(const FMat& a, const FMat& b) {
    FMat r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = fsub(r.e[i], b.e[i]);
    return r;
}

FMat mmul(const FieldSpec& fs, const FMat& a, const FMat& b) {
    FMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (fis_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = fadd(r.at(i, j), fmul(fs, a.at(i, k), b.at(k, j)));
        }
    return r;
}

FMat mscale(const FieldSpec& fs, const FVal& c, const FMat& a) {
    FMat r = a;
    for (auto& v : r.e) v = fmul(fs, c, v);
    return r;
}

std::optional<FMat> minverse(const FieldSpec& fs, const FMat& a) {
    int d = a.rows;
    FMat m = a, inv = FMat::identity(d);
    for (int c = 0; c < d; ++c) {
        int p = -1;
        for (int r = c; r < d; ++r)
            if (!fis_zero(m.at(r, c))) {
                p = r;
                break;
            }
        if (p < 0) return std::nullopt;
        for (int j = 0; j < d; ++j) {
            std::swap(m.at(p, j), m.at(c, j));
            std::swap(inv.at(p, j), inv.at(c, j));
        }
        FVal piv = finv(fs, m.at(c, c));
        for (int j = 0; j < d; ++j) {
            m.at(c, j) = fmul(fs, piv, m.at(c, j));
            inv.at(c, j) = fmul(fs, piv, inv.at(c, j));
        }
        for (int r = 0; r < d; ++r) {
            if (r == c || fis_zero(m.at(r, c))) continue;
            FVal f = m.at(r, c);
            for (int j = 0; j < d; ++j) {
                m.at(r, j) = fsub(m.at(r, j), fmul(fs, f, m.at(c, j)));
                inv.at(r, j) = fsub(inv.at(r, j), fmul(fs, f, inv.at(c, j)));
            }
        }
    }
    return inv;
}

int mrank(const FieldSpec& fs, FMat m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int p = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!fis_zero(m.at(r, c))) {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(rank, j));
        FVal piv = finv(fs, m.at(rank, c));
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = fmul(fs, piv, m.at(rank, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || fis_zero(m.at(r, c))) continue;
            FVal f = m.at(r, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = fsub(m.at(r, j), fmul(fs, f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

FMat eval_mpoly(const FieldSpec& fs, const MPoly& p, const std::vector<FMat>& hmats) {
    int d = hmats.empty() ? 1 : hmats[0].rows;
    FMat out = FMat::zero(d);
    for (auto& [m, c] : p.terms()) {
        FMat term = mscale(fs, fval(c), FMat::identity(d));
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (v >= hmats.size()) throw Error("eval_mpoly: auxiliary variable in coefficient");
            for (int r = 0; r < m[v]; ++r) term = mmul(fs, term, hmats[v]);
        }
        out = madd(out, term);
    }
    return out;
}

std::optional<FMat> eval_ratfunc(const FieldSpec& fs, const RatFunc& f, const std::vector<FMat>& hmats) {
    FMat num = eval_mpoly(fs, f.num(), hmats);
    for (auto& [fac, mult] : f.den_factors()) {
        FMat fm = eval_mpoly(fs, fac, hmats);
        auto inv = minverse(fs, fm);
        if (!inv) return std::nullopt;
        for (int r = 0; r < mult; ++r) num = mmul(fs, num, *inv);
    }
    return num;
}

// ------------------------------------------------------------ verification

Report verify_module(const std::vector<RatFunc>& sigma_sites, const MatrixRep& rep) {
    Report out;
    const FieldSpec& fs = rep.field;
    int n = rep.n, N = rep.N;
    VarSpec spec = sigma_sites.empty() ? VarSpec{n, 0} : sigma_sites[0].spec();
    RatFunc one = RatFunc::constant(spec, 1);

    auto ev = [&](const RatFunc& f) -> std::optional<FMat> {
        return eval_ratfunc(fs, f, rep.h);
    };
    auto idshift = [&](const FMat& m, const Rat& c) {
        return madd(m, mscale(fs, fval(c), FMat::identity(rep.dim)));
    };

    bool hcomm = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!msub(mmul(fs, rep.h[i], rep.h[j]), mmul(fs, rep.h[j], rep.h[i])).is_zero())
                hcomm = false;
    out.add("h matrices commute", hcomm);

    bool weights = true;
    std::string wwit;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < N; ++a) {
                FMat lhs = mmul(fs, rep.h[i], rep.xm(j, a));
                FMat rhs = mmul(fs, rep.xm(j, a), idshift(rep.h[i], Rat(i == j ? 1 : 0)));
                if (!msub(lhs, rhs).is_zero()) {
                    weights = false;
                    wwit = "h x at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
                FMat lhd = mmul(fs, rep.h[i], rep.dm(j, a));
                FMat rhd = mmul(fs, rep.dm(j, a), idshift(rep.h[i], Rat(i == j ? -1 : 0)));
                if (!msub(lhd, rhd).is_zero()) {
                    weights = false;
                    wwit = "h d at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
    out.add("weight relations", weights, wwit);

    bool xx = true, dd = true, cross = true, diag = true, evaluable = true;
    std::string xwit, dwit, cwit, gwit, ewit;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j) {
                RatFunc hij(hdiff_diff(spec, i, j));
                auto f1 = ev(one / hij);
                auto f2 = ev((hij * hij - one) / (hij * hij));
                if (!f1 || !f2) {
                    evaluable = false;
                    ewit = "x x coefficients at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    continue;
                }
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b) {
                        FMat lhs = mmul(fs, rep.xm(i, a), rep.xm(j, b));
                        FMat rhs = madd(mmul(fs, *f1, mmul(fs, rep.xm(i, b), rep.xm(j, a))),
                                        mmul(fs, *f2, mmul(fs, rep.xm(j, b), rep.xm(i, a))));
                        if (!msub(lhs, rhs).is_zero()) {
                            xx = false;
                            xwit = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        }
                        FMat lhsd = mmul(fs, rep.dm(i, a), rep.dm(j, b));
                        FMat rhsd = msub(mmul(fs, *f2, mmul(fs, rep.dm(j, b), rep.dm(i, a))),
                                         mmul(fs, *f1, mmul(fs, rep.dm(i, b), rep.dm(j, a))));
                        if (!msub(lhsd, rhsd).is_zero()) {
                            dd = false;
                            dwit = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        }
                    }
            }
            if (i != j) {
                RatFunc hij(hdiff_diff(spec, i, j));
                RatFunc cf = i < j ? one : hij * (hij - RatFunc::constant(spec, 2)) / ((hij - one) * (hij - one));
                auto cm = ev(cf);
                if (!cm) {
                    evaluable = false;
                    ewit = "cross coefficient at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    continue;
                }
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b) {
                        FMat lhs = mmul(fs, rep.xm(i, a), rep.dm(j, b));
                        FMat rhs = mmul(fs, *cm, mmul(fs, rep.dm(j, b), rep.xm(i, a)));
                        if (!msub(lhs, rhs).is_zero()) {
                            cross = false;
                            cwit = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        }
                    }
            }
        }
    for (int i = 0; i < n; ++i) {
        auto sg = ev(sigma_sites[i]);
        if (!sg) {
            evaluable = false;
            ewit = "sigma_" + std::to_string(i + 1);
            continue;
        }
        std::vector<FMat> mk(n);
        bool mok = true;
        for (int k = 0; k < n; ++k) {
            RatFunc mik = k == i ? one : one / (one + RatFunc(hdiff_diff(spec, k, i)));
            auto m = ev(mik);
            if (!m) {
                mok = false;
                break;
            }
            mk[k] = *m;
        }
        if (!mok) {
            evaluable = false;
            ewit = "diagonal coefficients at " + std::to_string(i + 1);
            continue;
        }
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                FMat lhs = mmul(fs, rep.xm(i, a), rep.dm(i, b));
                FMat rhs(rep.dim, rep.dim);
                for (int k = 0; k < n; ++k)
                    rhs = madd(rhs, mmul(fs, mk[k], mmul(fs, rep.dm(k, b), rep.xm(k, a))));
                if (a == b) rhs = msub(rhs, *sg);
                if (!msub(lhs, rhs).is_zero()) {
                    diag = false;
                    gwit = "site " + std::to_string(i + 1);
                }
            }
    }
    out.add("coefficients evaluable on the h matrices", evaluable, ewit);
    out.add("x x relations", xx, xwit);
    out.add("d d relations", dd, dwit);
    out.add("cross relations", cross, cwit);
    out.add("diagonal relations with sigma", diag, gwit);
    return out;
}

// ----------------------------------------------------------- weight modules

void ModuleVec::add(const std::vector<int>& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::vector<RatFunc> symbolic_weight(int n) {
    VarSpec ls{0, n};
    std::vector<RatFunc> out;
    for (int i = 0; i < n; ++i) out.push_back(RatFunc::variable(ls, i));
    return out;
}

std::vector<RatFunc> rational_weight(int n, const std::vector<Rat>& lambda) {
    VarSpec ls{0, n};
    std::vector<RatFunc> out;
    for (int i = 0; i < n; ++i) out.push_back(RatFunc::constant(ls, lambda[i]));
    return out;
}

ModuleVec basis_vector(int n, const std::vector<RatFunc>& lambda, const std::vector<int>& expo) {
    ModuleVec v;
    v.lspec = lambda[0].spec();
    std::vector<int> k = expo.empty() ? std::vector<int>(n, 0) : expo;
    v.terms[k] = RatFunc::constant(v.lspec, 1);
    return v;
}

ModuleVec module_action(const Element& e, ModuleMode mode, const std::vector<RatFunc>& lambda,
                        const ModuleVec& v) {
    const RingCtx& c = *e.ctx();
    if (c.copies() != 1) throw Error("module_action: single copy only");
    int n = c.n();
    VarSpec ls = lambda[0].spec();
    OrderTag tag = mode == ModuleMode::Lowest ? OrderTag::XFirst : OrderTag::DerFirst;
    Element en = e.converted(tag);
    ModuleVec out;
    out.lspec = ls;
    for (auto& [k, cv] : v.terms) {
        // basis monomial in canonical written order: coordinates ascending,
        // derivatives descending by site
        std::vector<Gen> w;
        if (mode == ModuleMode::Lowest) {
            for (int site = 0; site < n; ++site)
                for (int r = 0; r < k[site]; ++r) w.push_back(Gen{false, site, 0});
        } else {
            for (int site = n - 1; site >= 0; --site)
                for (int r = 0; r < k[site]; ++r) w.push_back(Gen{true, site, 0});
        }
        Element base = Element::word(e.ctx(), tag, w);
        Element prod = en * base;
        for (auto& [m, coef] : prod.terms()) {
            // the lowering block must be empty; read off the surviving exponents
            std::vector<int> expo(n, 0);
            bool kept = true;
            int G = c.gens_per_kind();
            for (int s = 0; s < G; ++s) {
                int dexp = m[s], xexp = m[G + s];
                if (mode == ModuleMode::Lowest) {
                    if (dexp != 0) kept = false;
                    expo[c.xgen_of_slot(s).site] = xexp;
                } else {
                    if (xexp != 0) kept = false;
                    expo[c.dgen_of_slot(s).site] = dexp;
                }
            }
            if (!kept) continue;
            // evaluate the coefficient at the weight of the target vector
            std::vector<std::pair<int, MPoly>> assign;
            for (int i = 0; i < n; ++i) {
                MPoly val = lambda[i].num();  // weights are polynomials (symbols or constants)
                if (!lambda[i].is_polynomial()) throw Error("module_action: weight must be polynomial");
                int shift = mode == ModuleMode::Lowest ? expo[i] : -expo[i];
                val += MPoly::constant(ls, Rat(shift));
                assign.emplace_back(i, val);
            }
            RatFunc value = coef.subst(assign, ls);
            out.add(expo, value * cv);
        }
    }
    return out;
}

CentralCharacter central_character_lowest(Element::Ctx ctx, const SigmaSpec& sigma,
                                          const std::vector<RatFunc>& lambda) {
    CentralCharacter out;
    int n = ctx->n();
    auto cs = central_elements(ctx, sigma);
    auto rho = rho_poly(sigma, ctx->spec());
    ModuleVec v = basis_vector(n, lambda);
    VarSpec ls = lambda[0].spec();
    for (int k = 0; k < n; ++k) {
        ModuleVec cv = module_action(cs[k], ModuleMode::Lowest, lambda, v);
        RatFunc scal(ls);
        for (auto& [expo, val] : cv.terms) {
            for (int i : expo)
                if (i != 0) throw Error("central element did not act by a scalar");
            scal = val;
        }
        out.scalar.push_back(scal);
        std::vector<std::pair<int, MPoly>> assign;
        for (int i = 0; i < n; ++i) {
            MPoly val = lambda[i].num() - MPoly::constant(ls, Rat(1));
            assign.emplace_back(i, val);
        }
        out.rho_down.push_back(rho[k].subst(assign, ls));
    }
    bool plus = true, minus = true;
    for (int k = 0; k < n; ++k) {
        if (out.scalar[k] != out.rho_down[k]) plus = false;
        if (out.scalar[k] != -out.rho_down[k]) minus = false;
    }
    out.sign = minus ? -1 : (plus ? +1 : 0);
    return out;
}

std::optional<std::vector<int>> finite_module_dims(const SigmaSpec& sigma,
                                                   const std::vector<Rat>& lambda, int bound) {
    int n = sigma.n;
    VarSpec spec{n, 0};
    RatFunc pot = sigma.realize(spec);
    std::vector<int> dims(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int m = 1; m <= bound && dims[i] < 0; ++m) {
            RatFunc diff = pot - pot.shift_one(i, -m);
            std::vector<std::pair<int, Rat>> assign;
            for (int j = 0; j < n; ++j) assign.emplace_back(j, lambda[j]);
            bool defined = true;
            Rat value(0);
            try {
                RatFunc v = diff.subst(
                    [&] {
                        std::vector<std::pair<int, MPoly>> a;
                        for (auto& [j, c] : assign) a.emplace_back(j, MPoly::constant(spec, c));
                        return a;
                    }(),
                    spec);
                if (!v.is_constant()) defined = false;
                else value = v.is_zero() ? Rat(0) : v.constant_value();
            } catch (const Error&) {
                defined = false;
            }
            if (defined && sgn(value) == 0) dims[i] = m - 1;
        }
        if (dims[i] < 0) return std::nullopt;
    }
    return dims;
}

MatrixRep build_matrix_module(Element::Ctx ctx, const std::vector<Rat>& lambda,
                              const std::vector<int>& dims) {
    const RingCtx& c = *ctx;
    int n = c.n();
    if (c.copies() != 1) throw Error("build_matrix_module: single copy only");
    // basis enumeration: all dbar-exponent vectors below the bounds
    std::vector<std::vector<int>> basis;
    std::vector<int> cur(n, 0);
    while (true) {
        basis.push_back(cur);
        int i = 0;
        while (i < n) {
            if (++cur[i] <= dims[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    auto index_of = [&](const std::vector<int>& k) -> int {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == k) return (int)i;
        return -1;
    };
    int dim = (int)basis.size();
    auto lam = rational_weight(n, lambda);

    MatrixRep rep;
    rep.n = n;
    rep.N = 1;
    rep.dim = dim;
    rep.field = FieldSpec{};
    rep.x.assign(n, FMat::zero(dim));
    rep.d.assign(n, FMat::zero(dim));
    rep.h.assign(n, FMat::zero(dim));

    auto fill = [&](FMat& m, const Element& g) {
        for (int col = 0; col < dim; ++col) {
            ModuleVec v = basis_vector(n, lam, basis[col]);
            ModuleVec gv = module_action(g, ModuleMode::Highest, lam, v);
            for (auto& [expo, val] : gv.terms) {
                bool inside = true;
                for (int i = 0; i < n; ++i)
                    if (expo[i] > dims[i]) inside = false;  // truncated away
                if (!inside) continue;
                int row = index_of(expo);
                if (row < 0) throw Error("build_matrix_module: basis bookkeeping");
                if (!val.is_constant()) throw Error("build_matrix_module: non-constant entry");
                m.at(row, col) = fadd(m.at(row, col), fval(val.is_zero() ? Rat(0) : val.constant_value()));
            }
        }
    };
    for (int i = 0; i < n; ++i) {
        fill(rep.x[i], Element::gen_x(ctx, i));
        fill(rep.d[i], Element::gen_d(ctx, i));
        fill(rep.h[i], Element::coefficient(ctx, RatFunc::variable(c.spec(), i)));
    }
    return rep;
}

// --------------------------------------------------------- irreducibility

namespace {

// span of the unital algebra generated by the matrices, as row vectors
std::vector<FMat> algebra_closure(const FieldSpec& fs, int dim, const std::vector<FMat>& gens) {
    std::vector<FMat> basis;
    std::vector<std::vector<FVal>> rows;  // reduced row forms
    auto reduce_insert = [&](const FMat& m) -> bool {
        std::vector<FVal> v(m.e);
        for (auto& row : rows) {
            int lead = -1;
            for (size_t i = 0; i < row.size(); ++i)
                if (!fis_zero(row[i])) {
                    lead = (int)i;
                    break;
                }
            if (lead < 0) continue;
            if (!fis_zero(v[lead])) {
                FVal f = fmul(fs, v[lead], finv(fs, row[lead]));
                for (size_t i = 0; i < v.size(); ++i) v[i] = fsub(v[i], fmul(fs, f, row[i]));
            }
        }
        bool nonzero = false;
        for (auto& x : v)
            if (!fis_zero(x)) nonzero = true;
        if (!nonzero) return false;
        rows.push_back(v);
        basis.push_back(m);
        return true;
    };
    reduce_insert(FMat::identity(dim));
    size_t frontier = 0;
    while (frontier < basis.size()) {
        FMat w = basis[frontier++];
        for (auto& g : gens) {
            reduce_insert(mmul(fs, w, g));
            if ((int)basis.size() == dim * dim) return basis;
        }
    }
    return basis;
}

// column space of m
std::vector<std::vector<FVal>> column_space(const FieldSpec& /*fs*/, const FMat& m) {
    std::vector<std::vector<FVal>> cols;
    for (int c = 0; c < m.cols; ++c) {
        std::vector<FVal> v(m.rows);
        for (int r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
        cols.push_back(v);
    }
    return cols;
}

std::vector<std::vector<FVal>> kernel_space(const FieldSpec& fs, const FMat& m) {
    // solve m v = 0
    FMat a = m;
    int rows = a.rows, cols = a.cols;
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (!fis_zero(a.at(r, c))) {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(rank, j));
        FVal piv = finv(fs, a.at(rank, c));
        for (int j = 0; j < cols; ++j) a.at(rank, j) = fmul(fs, piv, a.at(rank, j));
        for (int r = 0; r < rows; ++r) {
            if (r == rank || fis_zero(a.at(r, c))) continue;
            FVal f = a.at(r, c);
            for (int j = 0; j < cols; ++j) a.at(r, j) = fsub(a.at(r, j), fmul(fs, f, a.at(rank, j)));
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    std::vector<std::vector<FVal>> out;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<FVal> v(cols);
        v[c] = fval(Rat(1));
        for (int cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = fneg(a.at(pivot_of_col[cc], c));
        out.push_back(v);
    }
    return out;
}

int span_rank(const FieldSpec& fs, const std::vector<std::vector<FVal>>& vecs, int dim) {
    if (vecs.empty()) return 0;
    FMat m((int)vecs.size(), dim);
    for (size_t r = 0; r < vecs.size(); ++r)
        for (int c = 0; c < dim; ++c) m.at((int)r, c) = vecs[r][c];
    return mrank(fs, m);
}

// grow a subspace to invariance under the generators; returns its dimension
int invariant_closure_dim(const FieldSpec& fs, std::vector<std::vector<FVal>> vecs,
                          const std::vector<FMat>& gens, int dim) {
    size_t frontier = 0;
    std::vector<std::vector<FVal>> all = vecs;
    int rank = span_rank(fs, all, dim);
    while (frontier < all.size()) {
        auto v = all[frontier++];
        for (auto& g : gens) {
            std::vector<FVal> gv(dim);
            for (int r = 0; r < dim; ++r) {
                FVal s = fval(Rat(0));
                for (int c = 0; c < dim; ++c) s = fadd(s, fmul(fs, g.at(r, c), v[c]));
                gv[r] = s;
            }
            auto trial = all;
            trial.push_back(gv);
            int nr = span_rank(fs, trial, dim);
            if (nr > rank) {
                all.push_back(gv);
                rank = nr;
                if (rank == dim) return dim;
            }
        }
    }
    return rank;
}

}  // namespace

IrreducibilityResult invariant_subspace_scan(const MatrixRep& rep) {
    IrreducibilityResult out;
    const FieldSpec& fs = rep.field;
    int dim = rep.dim;
    std::vector<FMat> gens;
    for (auto& m : rep.x) gens.push_back(m);
    for (auto& m : rep.d) gens.push_back(m);
    for (auto& m : rep.h) gens.push_back(m);

    auto alg = algebra_closure(fs, dim, gens);
    out.algebra_dim = (int)alg.size();

    // invariant-subspace candidates: kernels and column spaces of algebra
    // elements, also shifted by their diagonal entries to reach the
    // eigenspaces of invertible elements
    bool reducible = false;
    std::string wit;
    for (auto& w0 : alg) {
        std::vector<FMat> shifted = {w0};
        for (int r = 0; r < dim; ++r) {
            FVal c = w0.at(r, r);
            if (fis_zero(c)) continue;
            FMat s = msub(w0, mscale(fs, c, FMat::identity(dim)));
            bool dup = false;
            for (auto& t : shifted)
                if (t == s) dup = true;
            if (!dup) shifted.push_back(s);
        }
        for (auto& w : shifted) {
            for (auto vecs : {kernel_space(fs, w), column_space(fs, w)}) {
                if (vecs.empty()) continue;
                int r0 = span_rank(fs, vecs, dim);
                if (r0 == 0 || r0 >= dim) continue;
                int r = invariant_closure_dim(fs, vecs, gens, dim);
                if (r > 0 && r < dim) {
                    reducible = true;
                    wit = "invariant subspace of dimension " + std::to_string(r);
                }
            }
            if (reducible) break;
        }
        if (reducible) break;
    }
    out.oracle_reducible = reducible;
    out.oracle_irreducible = !reducible && out.algebra_dim == dim * dim;
    if (reducible) out.witness = wit;

    // commutant and its idempotents decide decomposability
    {
        // solve X g = g X for all generators; unknowns are the dim^2 entries,
        // with values in the field handled as pairs of rational unknowns
        int du = dim * dim * 2;
        std::vector<std::vector<Rat>> rows;
        auto entry_index = [&](int r, int c, int part) { return (r * dim + c) * 2 + part; };
        for (auto& g : gens) {
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    // sum_k X_{rk} g_{kc} - g_{rk} X_{kc} = 0, split into parts
                    std::vector<Rat> row_a(du + 1, Rat(0)), row_b(du + 1, Rat(0));
                    for (int k = 0; k < dim; ++k) {
                        FVal gkc = g.at(k, c), grk = g.at(r, k);
                        // X_{rk} * gkc: (a + b t)(c + d t) with t^2 = c1 t + c0
                        row_a[entry_index(r, k, 0)] += gkc.a;
                        row_a[entry_index(r, k, 1)] += gkc.b * fs.c0;
                        row_b[entry_index(r, k, 0)] += gkc.b;
                        row_b[entry_index(r, k, 1)] += gkc.a + gkc.b * fs.c1;
                        // - grk * X_{kc}
                        row_a[entry_index(k, c, 0)] -= grk.a;
                        row_a[entry_index(k, c, 1)] -= grk.b * fs.c0;
                        row_b[entry_index(k, c, 0)] -= grk.b;
                        row_b[entry_index(k, c, 1)] -= grk.a + grk.b * fs.c1;
                    }
                    rows.push_back(row_a);
                    rows.push_back(row_b);
                }
        }
        // kernel dimension via elimination
        int rank = 0;
        std::vector<int> pivots;
        for (int c = 0; c < du && rank < (int)rows.size(); ++c) {
            int p = -1;
            for (int r = rank; r < (int)rows.size(); ++r)
                if (sgn(rows[r][c]) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            std::swap(rows[p], rows[rank]);
            Rat d0 = rows[rank][c];
            for (auto& v : rows[rank]) v /= d0;
            for (int r = 0; r < (int)rows.size(); ++r) {
                if (r == rank || sgn(rows[r][c]) == 0) continue;
                Rat f = rows[r][c];
                for (int cc = 0; cc <= du; ++cc) rows[r][cc] -= f * rows[rank][cc];
            }
            pivots.push_back(c);
            ++rank;
        }
        std::vector<bool> is_pivot(du, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<FMat> q_basis;
        for (int c = 0; c < du; ++c) {
            if (is_pivot[c]) continue;
            if (!fs.quadratic && c % 2 == 1) continue;  // no extension component
            std::vector<Rat> v(du, Rat(0));
            v[c] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
            FMat m(dim, dim);
            for (int rr = 0; rr < dim; ++rr)
                for (int cc = 0; cc < dim; ++cc)
                    m.at(rr, cc) = FVal{v[(rr * dim + cc) * 2], v[(rr * dim + cc) * 2 + 1]};
            q_basis.push_back(m);
        }
        // reduce the rational solution basis to a basis over the field
        std::vector<FMat> comm_basis;
        std::vector<std::vector<FVal>> redrows;
        for (auto& m : q_basis) {
            std::vector<FVal> v = m.e;
            for (auto& row : redrows) {
                int lead = -1;
                for (size_t i = 0; i < row.size(); ++i)
                    if (!fis_zero(row[i])) {
                        lead = (int)i;
                        break;
                    }
                if (lead >= 0 && !fis_zero(v[lead])) {
                    FVal f = fmul(fs, v[lead], finv(fs, row[lead]));
                    for (size_t i = 0; i < v.size(); ++i) v[i] = fsub(v[i], fmul(fs, f, row[i]));
                }
            }
            bool nz = false;
            for (auto& x : v)
                if (!fis_zero(x)) nz = true;
            if (nz) {
                redrows.push_back(v);
                comm_basis.push_back(m);
            }
        }
        out.commutant_dim = (int)comm_basis.size();
        if (out.commutant_dim == 1) {
            out.indecomposable_certified = true;
        } else if (out.commutant_dim == 2) {
            // basis {I, Z}; nontrivial idempotents exist iff c1^2 + 4 c0 is a
            // nonzero square, for Z^2 = c0 I + c1 Z
            FMat Z = comm_basis[0];
            bool isid = true;
            for (int r = 0; r < dim && isid; ++r)
                for (int c = 0; c < dim; ++c) {
                    FVal want = r == c ? Z.at(0, 0) : fval(Rat(0));
                    if (!(Z.at(r, c) == want)) isid = false;
                }
            if (isid) Z = comm_basis[1];
            FMat Z2 = mmul(fs, Z, Z);
            // solve Z^2 = alpha I + beta Z entrywise (field values, but the
            // relevant alpha/beta are rational for our fixtures)
            FVal beta{}, alpha{};
            bool got = false;
            for (int r = 0; r < dim && !got; ++r)
                for (int c = 0; c < dim && !got; ++c)
                    if (r != c && !fis_zero(Z.at(r, c))) {
                        beta = fmul(fs, Z2.at(r, c), finv(fs, Z.at(r, c)));
                        got = true;
                    }
            if (!got) {
                // Z diagonal but non-scalar: diagonal idempotents exist
                out.indecomposable_certified = false;
            } else {
                alpha = fsub(Z2.at(0, 0), fmul(fs, beta, Z.at(0, 0)));
                // nontrivial idempotents exist iff beta^2 + 4 alpha is a
                // nonzero square in the field
                FVal disc = fadd(fmul(fs, beta, beta), fmul(fs, fval(Rat(4)), alpha));
                if (sgn(disc.b) == 0) {
                    Rat root;
                    bool square = rat_sqrt(disc.a, root) && sgn(disc.a) != 0;
                    out.indecomposable_certified = !square;
                } else {
                    out.commutant_undetermined = true;
                }
            }
        } else {
            out.commutant_undetermined = true;
        }
    }
    return out;
}

IrreducibilityResult irreducibility_test(const SigmaSpec& sigma, const std::vector<Rat>& lambda,
                                         const std::vector<int>& dims, const MatrixRep& rep) {
    IrreducibilityResult out = invariant_subspace_scan(rep);
    int n = sigma.n;
    VarSpec spec{n, 0};
    RatFunc pot = sigma.realize(spec);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        for (int m = 1; m <= dims[i] + 1; ++m) {
            RatFunc diff = pot - pot.shift_one(i, -m);
            std::vector<std::pair<int, MPoly>> assign;
            for (int j = 0; j < n; ++j) assign.emplace_back(j, MPoly::constant(spec, lambda[j]));
            RatFunc v = diff.subst(assign, spec);
            bool zero = v.is_zero();
            if (m <= dims[i] && zero) ok = false;
            if (m == dims[i] + 1 && !zero) ok = false;
        }
    }
    out.analytic_irreducible = ok;
    return out;
}

// ------------------------------------------------------------- fixtures

Fixture fixture_nondiagonalizable() {
    Fixture f;
    f.name = "nondiagonalizable-cartan";
    f.sigma = SigmaSpec::complete_h(2, 4);
    VarSpec spec{2, 0};
    f.sigma_sites = f.sigma.sigmas(spec);
    MatrixRep& r = f.rep;
    r.n = 2;
    r.N = 1;
    r.dim = 2;
    r.field = FieldSpec{true, Rat(0), Rat(-1)};  // theta^2 = -1
    r.x.assign(2, FMat::zero(2));
    r.d.assign(2, FMat::zero(2));
    r.h.assign(2, FMat::zero(2));
    // h_1 = [[(1-i)/2, 1/2], [0, (1-i)/2]], h_2 the conjugate
    r.h[0].at(0, 0) = FVal{Rat(1, 2), Rat(-1, 2)};
    r.h[0].at(1, 1) = FVal{Rat(1, 2), Rat(-1, 2)};
    r.h[0].at(0, 1) = fval(Rat(1, 2));
    r.h[1].at(0, 0) = FVal{Rat(1, 2), Rat(1, 2)};
    r.h[1].at(1, 1) = FVal{Rat(1, 2), Rat(1, 2)};
    r.h[1].at(0, 1) = fval(Rat(1, 2));
    return f;
}

Fixture fixture_sixth_root() {
    Fixture f;
    f.name = "sixth-root-of-unity";
    f.sigma = SigmaSpec::complete_h(2, 6);
    VarSpec spec{2, 0};
    f.sigma_sites = f.sigma.sigmas(spec);
    MatrixRep& r = f.rep;
    r.n = 2;
    r.N = 1;
    r.dim = 2;
    r.field = FieldSpec{true, Rat(1), Rat(-1)};  // theta^2 = theta - 1
    r.x.assign(2, FMat::zero(2));
    r.d.assign(2, FMat::zero(2));
    r.h.assign(2, FMat::zero(2));
    r.x[0].at(1, 0) = fval(Rat(1));
    r.h[0].at(1, 1) = fval(Rat(1));
    r.h[1].at(0, 0) = FVal{Rat(0), Rat(1)};
    r.h[1].at(1, 1) = FVal{Rat(0), Rat(1)};
    return f;
}

Fixture fixture_shifted_chain(int p, const Rat& l1, const Rat& l2) {
    Fixture f;
    f.name = "shifted-chain-p" + std::to_string(p);
    // site polynomials A_1(t) = prod_{s=0..p} (t - l1 + s), A_2(t) = (t - l2)(t - l2 + 1):
    // both vanish on the h-spectrum and on its shift by one.
    VarSpec ts = UniRat::tspec();
    RatFunc A1 = RatFunc::constant(ts, 1);
    for (int s = 0; s <= p; ++s)
        A1 *= RatFunc::variable(ts, 0) - RatFunc::constant(ts, l1 - Rat(s));
    RatFunc A2 = (RatFunc::variable(ts, 0) - RatFunc::constant(ts, l2)) *
                 (RatFunc::variable(ts, 0) - RatFunc::constant(ts, l2) + RatFunc::constant(ts, 1));
    f.sigma = SigmaSpec::from_sites(2, {UniRat{A1}, UniRat{A2}});
    VarSpec spec{2, 0};
    f.sigma_sites = f.sigma.sigmas(spec);
    MatrixRep& r = f.rep;
    r.n = 2;
    r.N = 1;
    r.dim = p;
    r.field = FieldSpec{};
    r.x.assign(2, FMat::zero(p));
    r.d.assign(2, FMat::zero(p));
    r.h.assign(2, FMat::zero(p));
    for (int j = 0; j < p; ++j) {
        r.h[0].at(j, j) = fval(l1 - Rat(j));
        r.h[1].at(j, j) = fval(l2);
        if (j + 1 < p) r.x[0].at(j, j + 1) = fval(Rat(1));
    }
    return f;
}

bool telescoping_identity(const SigmaSpec& sigma, int i, int m) {
    VarSpec spec{sigma.n, 0};
    RatFunc pot = sigma.realize(spec);
    RatFunc si = finite_difference(pot, i);
    RatFunc sum(spec);
    for (int k = 0; k < m; ++k) sum += si.shift_one(i, -k);
    return sum == pot - pot.shift_one(i, -m);
}

std::string ConjectureProbe::str() const {
    std::ostringstream os;
    for (auto& e : entries) {
        os << "  H_" << e.m << ", n=" << e.n << ": expected "
           << (e.expects_modules ? "modules" : "no modules") << "; "
           << (e.found_rational_weight ? "rational weight found" : "no rational weight found");
        if (!e.note.empty()) os << " (" << e.note << ")";
        os << "\n";
    }
    os << "  probe " << (sound ? "consistent" : "INCONSISTENT") << " with the expectation\n";
    return os.str();
}

ConjectureProbe conjecture_probe(uint64_t seed) {
    ConjectureProbe out;
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 4; ++m) {
            ConjectureProbe::Entry e;
            e.m = m;
            e.n = n;
            e.expects_modules = m > n;
            SigmaSpec sp = SigmaSpec::complete_h(n, m);
            VarSpec spec{n, 0};
            RatFunc pot = sp.realize(spec);
            if (n == 1) {
                // rational roots of the vanishing polynomial per step size
                for (int k = 1; k <= 6 && !e.found_rational_weight; ++k) {
                    RatFunc diff = pot - pot.shift_one(0, -k);
                    auto uni = diff.num().univariate_in(0);
                    std::vector<Rat> coeffs;
                    for (auto& c : uni) coeffs.push_back(c.is_zero() ? Rat(0) : c.constant_value());
                    auto roots = rational_roots(coeffs);
                    for (auto& r : roots) {
                        auto d = finite_module_dims(sp, {r}, 16);
                        if (d) {
                            e.found_rational_weight = true;
                            e.note = "lambda = " + to_string(r) + ", dims " + std::to_string((*d)[0] + 1);
                        }
                    }
                }
                if (!e.found_rational_weight && m > 1)
                    e.note = "vanishing locus has no rational points";
            } else {
                uint64_t s = seed + 1000 * m;
                auto next = [&s]() {
                    s = s * 6364136223846793005ull + 1442695040888963407ull;
                    return (int)((s >> 33) % 25) - 12;
                };
                for (int t = 0; t < 40 && !e.found_rational_weight; ++t) {
                    Rat l1 = Rat(next(), 2) + Rat(1, 7), l2 = Rat(next(), 3) + Rat(2, 5);
                    auto d = finite_module_dims(sp, {l1, l2}, 12);
                    if (d) {
                        e.found_rational_weight = true;
                        e.note = "lambda = (" + to_string(l1) + "," + to_string(l2) + ")";
                    }
                }
                if (!e.found_rational_weight) e.note = "no witness on the sampled grid";
            }
            if (e.found_rational_weight && !e.expects_modules) out.sound = false;
            out.entries.push_back(e);
        }
    }
    return out;
}

}  // namespace hdiff
