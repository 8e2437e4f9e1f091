#include "hdiff/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hdiff {

VarNames cartan_names(int n, const std::vector<std::string>& aux) {
    VarNames vn;
    for (int i = 1; i <= n; ++i) vn.names.push_back("h" + std::to_string(i));
    for (auto& a : aux) vn.names.push_back(a);
    return vn;
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // lex with variable 0 most significant
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly MPoly::constant(VarSpec spec, const Rat& c) {
    MPoly p(spec);
    Rat cc = c;
    cc.canonicalize();
    if (sgn(cc) != 0) p.terms_[Mono(spec.size(), 0)] = cc;
    return p;
}

MPoly MPoly::variable(VarSpec spec, int i, int power) {
    if (i < 0 || i >= spec.size()) throw Error("MPoly::variable: index out of range");
    if (power < 0) throw Error("MPoly::variable: negative power");
    MPoly p(spec);
    if (power == 0) return constant(spec, 1);
    Mono m(spec.size(), 0);
    m[i] = power;
    p.terms_[m] = 1;
    return p;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("MPoly::constant_value: not constant");
    return terms_.begin()->second;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m[var]);
    return terms_.empty() ? -1 : d;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::set_coeff(const Mono& m, const Rat& c) {
    Rat cc = c;
    cc.canonicalize();
    if (sgn(cc) == 0) terms_.erase(m);
    else terms_[m] = cc;
}

void MPoly::add_term(const Mono& m, const Rat& c0) {
    Rat c = c0;
    c.canonicalize();
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(spec_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (spec_ != o.spec_) throw Error("MPoly: spec mismatch");
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (spec_ != o.spec_) throw Error("MPoly: spec mismatch");
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (spec_ != o.spec_) throw Error("MPoly: spec mismatch");
    MPoly r(spec_);
    Mono m(spec_.size());
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rat& c0) const {
    MPoly r(spec_);
    Rat c = c0;
    c.canonicalize();
    if (sgn(c) == 0) return r;
    for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) throw Error("MPoly::pow: negative exponent");
    MPoly r = constant(spec_, 1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return spec_ == o.spec_ && terms_ == o.terms_;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
    if (spec_ != d.spec_) throw Error("MPoly: spec mismatch");
    if (d.is_zero()) throw Error("MPoly: division by zero");
    MPoly q(spec_), r = *this;
    const Mono& dl = *d.lead_mono();
    Rat dc = d.lead_coeff();
    Mono t(spec_.size());
    while (!r.is_zero()) {
        const Mono& rl = *r.lead_mono();
        for (size_t i = 0; i < t.size(); ++i) {
            t[i] = rl[i] - dl[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rat tc = r.lead_coeff() / dc;
        MPoly tm(spec_);
        tm.terms_[t] = tc;
        q += tm;
        r -= tm * d;
    }
    return q;
}

MPoly MPoly::shift(const std::vector<int>& v) const {
    if ((int)v.size() != spec_.nshift) throw Error("MPoly::shift: length mismatch");
    bool trivial = true;
    for (int x : v)
        if (x != 0) trivial = false;
    if (trivial) return *this;
    MPoly r(spec_);
    for (auto& [m, c] : terms_) {
        // expand prod_i (x_i + v_i)^{m_i} over the shifted block
        MPoly term = constant(spec_, c);
        Mono base(spec_.size(), 0);
        for (int i = spec_.nshift; i < spec_.size(); ++i) base[i] = m[i];
        MPoly basePoly(spec_);
        basePoly.terms_[base] = 1;
        term = term * basePoly;
        for (int i = 0; i < spec_.nshift; ++i) {
            if (m[i] == 0) continue;
            MPoly lin = variable(spec_, i) + constant(spec_, Rat(v[i]));
            term = term * lin.pow(m[i]);
        }
        r += term;
    }
    return r;
}

MPoly MPoly::subst(const std::vector<std::pair<int, MPoly>>& assign, VarSpec out_spec) const {
    // variables not mentioned map to themselves (requires same index layout)
    std::vector<const MPoly*> val(spec_.size(), nullptr);
    for (auto& [i, p] : assign) {
        if (i < 0 || i >= spec_.size()) throw Error("MPoly::subst: index");
        if (p.spec() != out_spec) throw Error("MPoly::subst: value spec mismatch");
        val[i] = &p;
    }
    MPoly r(out_spec);
    for (auto& [m, c] : terms_) {
        MPoly term = constant(out_spec, c);
        for (int i = 0; i < spec_.size(); ++i) {
            if (m[i] == 0) continue;
            if (val[i]) {
                term = term * val[i]->pow(m[i]);
            } else {
                if (i >= out_spec.size()) throw Error("MPoly::subst: unmapped variable out of range");
                term = term * variable(out_spec, i, m[i]);
            }
        }
        r += term;
    }
    return r;
}

MPoly MPoly::subst_scalars(const std::vector<std::pair<int, Rat>>& assign) const {
    std::vector<std::pair<int, MPoly>> a;
    for (auto& [i, c] : assign) a.emplace_back(i, constant(spec_, c));
    return subst(a, spec_);
}

std::vector<MPoly> MPoly::univariate_in(int var) const {
    std::vector<MPoly> out;
    for (auto& [m, c] : terms_) {
        int d = m[var];
        if ((int)out.size() <= d) out.resize(d + 1, MPoly(spec_));
        Mono mm = m;
        mm[var] = 0;
        out[d].add_term(mm, c);
    }
    if (out.empty()) out.push_back(MPoly(spec_));
    return out;
}

Rat MPoly::content() const {
    if (terms_.empty()) return Rat(0);
    mpz_class ng(0), dl(1);
    for (auto& [m, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ng.get_mpz_t(), c.get_num().get_mpz_t());
        ng = g;
        mpz_lcm(g.get_mpz_t(), dl.get_mpz_t(), c.get_den().get_mpz_t());
        dl = g;
    }
    Rat c(ng, dl);
    c.canonicalize();
    if (sgn(lead_coeff()) < 0) c = -c;
    return c;
}

MPoly MPoly::primitive() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    MPoly r(spec_);
    for (auto& [m, cc] : terms_) r.terms_[m] = cc / c;
    return r;
}

const Mono* MPoly::lead_mono() const {
    if (terms_.empty()) return nullptr;
    return &terms_.rbegin()->first;
}

Rat MPoly::lead_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(spec_);
    for (auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * Rat(m[var]));
    }
    return r;
}

std::string MPoly::str(const VarNames& vn) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        Rat c = it->second;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool allzero = mono_degree(m) == 0;
        bool coef_one = (c == 1);
        if (!coef_one || allzero) os << to_string(c);
        bool started = !coef_one || allzero;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            os << vn[(int)i];
            if (m[i] > 1) os << "^" << m[i];
            started = true;
        }
        first = false;
    }
    return os.str();
}

int MPoly::compare(const MPoly& a, const MPoly& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    GrlexLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second < ib->second) return -1;
        if (ib->second < ia->second) return 1;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

}  // namespace hdiff
