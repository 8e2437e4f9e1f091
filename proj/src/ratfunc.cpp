#include "hdiff/ratfunc.hpp"

#include <sstream>

namespace hdiff {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num) {
    if (den.is_zero()) throw Error("RatFunc: zero denominator");
    if (den.is_constant()) {
        num_ = num * (Rat(1) / den.constant_value());
        return;
    }
    Rat c = den.content();
    num_ = num * (Rat(1) / c);
    mul_factor(den.primitive(), 1);
    reduce();
}

void RatFunc::mul_factor(const MPoly& f, int mult) {
    if (mult == 0 || f.is_constant()) return;
    den_[f] += mult;
    if (den_[f] == 0) den_.erase(f);
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_exact(it->first);
            if (!q) break;
            num_ = *q;
            --it->second;
        }
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }
}

MPoly RatFunc::den_expanded() const {
    MPoly d = MPoly::constant(spec(), 1);
    for (auto& [f, m] : den_) d = d * f.pow(m);
    return d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (spec() != o.spec()) throw Error("RatFunc: spec mismatch");
    RatFunc r(spec());
    // union denominator with max multiplicities
    r.den_ = den_;
    for (auto& [f, m] : o.den_) {
        auto it = r.den_.find(f);
        if (it == r.den_.end()) r.den_[f] = m;
        else it->second = std::max(it->second, m);
    }
    MPoly a = num_, b = o.num_;
    for (auto& [f, m] : r.den_) {
        auto ia = den_.find(f);
        auto ib = o.den_.find(f);
        int ma = ia == den_.end() ? 0 : ia->second;
        int mb = ib == o.den_.end() ? 0 : ib->second;
        if (m - ma > 0) a = a * f.pow(m - ma);
        if (m - mb > 0) b = b * f.pow(m - mb);
    }
    r.num_ = a + b;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (spec() != o.spec()) throw Error("RatFunc: spec mismatch");
    RatFunc r(spec());
    if (is_zero() || o.is_zero()) return r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (auto& [f, m] : o.den_) r.mul_factor(f, m);
    r.reduce();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("RatFunc: inverse of zero");
    RatFunc r(spec());
    r.num_ = den_expanded();
    Rat c = num_.content();
    r.num_ = r.num_ * (Rat(1) / c);
    MPoly p = num_.primitive();
    if (!p.is_constant()) r.den_[p] = 1;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r = constant(spec(), 1);
    RatFunc base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (spec() != o.spec()) return false;
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_expanded() == o.num_ * den_expanded();
}

RatFunc RatFunc::shift(const std::vector<int>& v) const {
    RatFunc r(spec());
    r.num_ = num_.shift(v);
    for (auto& [f, m] : den_) {
        MPoly g = f.shift(v);
        Rat c = g.content();
        if (c != 1) {
            Rat inv = 1;
            for (int i = 0; i < m; ++i) inv /= c;
            r.num_ = r.num_ * inv;
            g = g.primitive();
        }
        r.mul_factor(g, m);
    }
    r.reduce();
    return r;
}

RatFunc RatFunc::shift_one(int site, int amount) const {
    std::vector<int> v(spec().nshift, 0);
    if (site < 0 || site >= spec().nshift) throw Error("RatFunc::shift_one: site out of range");
    v[site] = amount;
    return shift(v);
}

RatFunc RatFunc::subst(const std::vector<std::pair<int, MPoly>>& assign, VarSpec out_spec) const {
    RatFunc r(num_.subst(assign, out_spec));
    for (auto& [f, m] : den_) {
        MPoly g = f.subst(assign, out_spec);
        if (g.is_zero()) throw Error("RatFunc::subst: denominator vanishes");
        RatFunc gf(MPoly::constant(out_spec, 1), g);
        r = r * gf.pow(m);
    }
    return r;
}

RatFunc RatFunc::subst_scalar(int var, const Rat& c) const {
    return subst({{var, MPoly::constant(spec(), c)}}, spec());
}

bool RatFunc::defined_at(int var, const Rat& c) const {
    for (auto& [f, m] : den_) {
        if (f.subst_scalars({{var, c}}).is_zero()) return false;
    }
    return true;
}

std::string RatFunc::str(const VarNames& vn) const {
    std::ostringstream os;
    bool paren_num = den_.size() > 0 && num_.terms().size() > 1;
    if (paren_num) os << "(";
    os << num_.str(vn);
    if (paren_num) os << ")";
    if (!den_.empty()) {
        os << "/";
        bool many = den_.size() > 1 || den_.begin()->second > 1 || den_.begin()->first.terms().size() > 1;
        if (many) os << "(";
        bool first = true;
        for (auto& [f, m] : den_) {
            if (!first) os << "*";
            bool pf = f.terms().size() > 1;
            if (pf) os << "(";
            os << f.str(vn);
            if (pf) os << ")";
            if (m > 1) os << "^" << m;
            first = false;
        }
        if (many) os << ")";
    }
    return os.str();
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
    int c = MPoly::compare(a.num_, b.num_);
    if (c != 0) return c;
    auto ia = a.den_.begin(), ib = b.den_.begin();
    for (; ia != a.den_.end() && ib != b.den_.end(); ++ia, ++ib) {
        int d = MPoly::compare(ia->first, ib->first);
        if (d != 0) return d;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.den_.end()) return 1;
    if (ib != b.den_.end()) return -1;
    return 0;
}

}  // namespace hdiff
