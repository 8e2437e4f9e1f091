#ifndef HDIFF_LOCALIZED_HPP
#define HDIFF_LOCALIZED_HPP

#include "hdiff/ring.hpp"

namespace hdiff {

// The single-copy ring with the coordinate generators inverted: normal form
// dbar-block then x-block, with integer x-exponents. The derivative
// generators cross an inverted coordinate through the exchange relations; the
// same-site crossing eliminates the pair through dbar_i = Gamma_i (x^i)^{-1}.
class LocElement {
  public:
    using Ctx = Element::Ctx;
    using Key = std::vector<int>;  // [dexp (>= 0), xexp (in Z)], site-slot order as in Element

    LocElement() = default;
    explicit LocElement(Ctx ctx) : ctx_(std::move(ctx)) {}

    static LocElement zero(Ctx ctx) { return LocElement(std::move(ctx)); }
    static LocElement one(Ctx ctx);
    static LocElement coefficient(Ctx ctx, const RatFunc& f);
    static LocElement gen_x(Ctx ctx, int site, int power = 1);  // power may be negative
    static LocElement gen_d(Ctx ctx, int site);
    static LocElement from_element(const Element& e);  // DerFirst, N = 1

    const Ctx& ctx() const { return ctx_; }
    const std::map<Key, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LocElement operator+(const LocElement& o) const;
    LocElement operator-(const LocElement& o) const;
    LocElement operator-() const;
    LocElement operator*(const LocElement& o) const;
    LocElement& operator+=(const LocElement& o);
    LocElement& operator-=(const LocElement& o) { return *this += -o; }
    bool operator==(const LocElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const LocElement& o) const { return !(*this == o); }

    LocElement scaled(const RatFunc& f) const;
    LocElement times_coeff_right(const RatFunc& f) const;
    LocElement commutator(const LocElement& o) const { return *this * o - o * *this; }
    LocElement pow(int k) const;

    // defined when every x-exponent is nonnegative
    std::optional<Element> to_element() const;

    std::string str() const;

  private:
    struct Letter {
        int kind;  // 0: dbar, 1: x, 2: x inverse
        int site;
    };
    void add_term(const Key& m, const RatFunc& c);
    static LocElement prepend(const Letter& g, const LocElement& e);
    LocElement prepended_mono(const Letter& g) const;
    std::vector<Letter> letters(const Key& m) const;

    Ctx ctx_;
    std::map<Key, RatFunc> terms_;
};

// inverse of x'^i = x^i psi'_i in the localized ring
LocElement twisted_x(LocElement::Ctx ctx, int site);
LocElement twisted_x_inverse(LocElement::Ctx ctx, int site);

}  // namespace hdiff

#endif
