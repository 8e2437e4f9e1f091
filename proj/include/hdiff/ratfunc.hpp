#ifndef HDIFF_RATFUNC_HPP
#define HDIFF_RATFUNC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdiff/mpoly.hpp"

namespace hdiff {

// Rational function num / prod f^m. The denominator is kept as a multiset of
// primitive factors so that the cancellations the rewriting engine produces
// stay cheap: factors are cancelled against the numerator by exact division,
// never by a multivariate gcd. Equality is decided by cross-multiplication.
class RatFunc {
  public:
    using FactorMap = std::map<MPoly, int, MPolyLess>;

    RatFunc() = default;
    explicit RatFunc(VarSpec spec) : num_(MPoly::zero(spec)) {}
    RatFunc(const MPoly& num) : num_(num) {}
    RatFunc(const MPoly& num, const MPoly& den);

    static RatFunc constant(VarSpec spec, const Rat& c) { return RatFunc(MPoly::constant(spec, c)); }
    static RatFunc variable(VarSpec spec, int i, int pow = 1) { return RatFunc(MPoly::variable(spec, i, pow)); }

    const MPoly& num() const { return num_; }
    const FactorMap& den_factors() const { return den_; }
    VarSpec spec() const { return num_.spec(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rat constant_value() const { return num_.constant_value(); }
    MPoly den_expanded() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(int k) const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc shift(const std::vector<int>& v) const;
    RatFunc shift_one(int site, int amount) const;

    // Substitution; throws Error on a vanishing denominator factor.
    RatFunc subst(const std::vector<std::pair<int, MPoly>>& assign, VarSpec out_spec) const;
    RatFunc subst_scalar(int var, const Rat& c) const;
    bool defined_at(int var, const Rat& c) const;

    std::string str(const VarNames& vn) const;

    static int compare(const RatFunc& a, const RatFunc& b);

  private:
    void mul_factor(const MPoly& f, int mult);  // multiply denominator by primitive factor^mult
    void reduce();
    MPoly num_;
    FactorMap den_;
};

}  // namespace hdiff

#endif
