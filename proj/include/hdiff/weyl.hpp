#ifndef HDIFF_WEYL_HPP
#define HDIFF_WEYL_HPP

#include "hdiff/center.hpp"
#include "hdiff/localized.hpp"

namespace hdiff {

// Localized Weyl algebra extended by central labels: Laurent monomials in the
// invertible coordinates with coefficients rational in H_1..H_n and
// polynomial in a_1..a_n. Normal form X^k f(H, a) with the coefficient on the
// right; exchange rule f(H) X^l = X^l f(H + l).
class WeylElement {
  public:
    using Key = std::vector<int>;  // X-exponents in Z^n

    WeylElement() = default;
    WeylElement(int n, VarSpec spec) : n_(n), spec_(spec) {}

    // spec: n shiftable H-slots followed by n aux a-slots (+ extra aux)
    static VarSpec default_spec(int n, int extra_aux = 0) { return VarSpec{n, n + extra_aux}; }

    static WeylElement zero(int n, VarSpec spec) { return WeylElement(n, spec); }
    static WeylElement one(int n, VarSpec spec);
    static WeylElement coefficient(int n, VarSpec spec, const RatFunc& f);
    static WeylElement X(int n, VarSpec spec, int i, int power = 1);
    static WeylElement D(int n, VarSpec spec, int i);
    static WeylElement H(int n, VarSpec spec, int i);
    static WeylElement a(int n, VarSpec spec, int i);

    int n() const { return n_; }
    VarSpec spec() const { return spec_; }
    const std::map<Key, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // the coefficient of X^0 when it is the only term (empty -> zero)
    std::optional<RatFunc> as_coefficient() const;

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator-() const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o) { return *this += -o; }
    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    WeylElement scaled(const RatFunc& f) const;       // right multiplication by a coefficient
    WeylElement left_scaled(const RatFunc& f) const;  // left multiplication (shifts across X powers)
    WeylElement pow(int k) const;

    std::string str() const;

  private:
    void add_term(const Key& m, const RatFunc& c);
    int n_ = 0;
    VarSpec spec_;
    std::map<Key, RatFunc> terms_;
};

// widen a coefficient from the plain Cartan spec into a larger aux spec
RatFunc extend_spec(const RatFunc& f, VarSpec target);

// Isomorphism data between the localized single-copy ring with potential
// sigma and the extended localized Weyl algebra.
class WeylIso {
  public:
    WeylIso(int n, const SigmaSpec& sigma);

    int n() const { return n_; }
    VarSpec wspec() const { return wspec_; }
    Element::Ctx ring() const { return ctx_; }

    // Upsilon_i(H_i, a): the image of chi_i Gamma_i
    RatFunc upsilon(int i) const;

    WeylElement image_x(int i) const;     // mu^{-1}(x^i)
    WeylElement image_d(int i) const;     // mu^{-1}(dbar_i)
    WeylElement image_h(int i) const;     // mu^{-1}(h_i)
    WeylElement mu_inverse(const Element& e) const;
    WeylElement mu_inverse(const LocElement& e) const;

    LocElement mu_forward(const WeylElement& w) const;

    Report check() const;  // the full relation/roundtrip report

  private:
    int n_;
    SigmaSpec sigma_;
    VarSpec wspec_;
    Element::Ctx ctx_;
    std::vector<Element> c_;         // central elements
    std::vector<LocElement> c_loc_;  // the same, in the localized engine
};

Report check_iso(int n, const SigmaSpec& sigma);

// Action of a Weyl-model element on the Laurent basis vector indexed by
// j in Z^n, with symbolic shift parameters and the central labels acting by
// the symbols A_k: coefficients are rational functions of (A_1..A_n, g_1..g_n).
// The element may live over the plain spec or over one extended by the shift
// symbols.
std::map<std::vector<int>, RatFunc> laurent_action(const WeylElement& w,
                                                   const std::vector<int>& j);
VarSpec laurent_value_spec(int n);  // {0, 2n}: labels then shift symbols

}  // namespace hdiff

#endif
