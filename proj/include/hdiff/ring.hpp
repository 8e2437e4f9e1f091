#ifndef HDIFF_RING_HPP
#define HDIFF_RING_HPP

#include <memory>
#include <variant>

#include "hdiff/families.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

struct Gen {
    bool der = false;  // derivative generator vs coordinate generator
    int site = 0;      // 0-based
    int copy = 0;      // 0-based
    bool operator==(const Gen& o) const { return der == o.der && site == o.site && copy == o.copy; }
};

// Context for the ring with n sites and N copies over the localized Cartan
// coefficients. The zero-order term of the site-diagonal cross relation is
// either delta_{ab} * sigma_i or an explicit matrix sigma_{i,ab}.
class RingCtx {
  public:
    RingCtx(int n, int N, std::vector<RatFunc> sigma_sites, VarSpec spec);
    RingCtx(int n, int N, std::vector<RatFunc> sigma_sites);  // spec = {n, 0}

    static std::shared_ptr<const RingCtx> make(int n, int N, std::vector<RatFunc> sigma_sites);
    static std::shared_ptr<const RingCtx> make_matrix(int n, int N,
                                                      std::vector<RatFunc> sigma_iab,
                                                      VarSpec spec);

    int n() const { return n_; }
    int copies() const { return N_; }
    VarSpec spec() const { return spec_; }
    int gens_per_kind() const { return n_ * N_; }

    RatFunc sigma(int i, int a, int b) const;
    const RatFunc& sigma_site(int i) const;
    bool diagonal_sigma() const { return sigma_mat_.empty(); }

    // coefficient c with x^{i.}  dbar_{j.} = c dbar_{j.} x^{i.}, i != j
    const RatFunc& cross_coef(int i, int j) const;
    // M_{ik} = 1/(1 + h_k - h_i)  (diagonal relation matrix), and its inverse
    const RatFunc& m_entry(int i, int k) const;
    const RatFunc& minv_entry(int i, int k) const;

    int dslot(int site, int copy) const { return (n_ - 1 - site) * N_ + copy; }
    int xslot(int site, int copy) const { return site * N_ + copy; }
    Gen dgen_of_slot(int s) const { return Gen{true, n_ - 1 - s / N_, s % N_}; }
    Gen xgen_of_slot(int s) const { return Gen{false, s / N_, s % N_}; }

    RatFunc rf(long c) const { return RatFunc::constant(spec_, Rat(c)); }
    RatFunc hdiff(int i, int j) const { return RatFunc(hdiff_diff(spec_, i, j)); }

  private:
    void init();
    int n_, N_;
    VarSpec spec_;
    std::vector<RatFunc> sigma_;       // per site (diagonal case)
    std::vector<RatFunc> sigma_mat_;   // [i*N*N + a*N + b] when non-diagonal
    std::vector<RatFunc> cross_;       // [i*n + j]
    std::vector<RatFunc> m_, minv_;    // n x n
};

enum class OrderTag { DerFirst, XFirst };

// Element in normal form: map monomial -> left coefficient. A monomial is a
// flat exponent vector [d-slots..., x-slots...]; the order tag says which
// ordered product of generators it denotes.
class Element {
  public:
    using Ctx = std::shared_ptr<const RingCtx>;
    using Key = std::vector<int>;

    Element() = default;
    Element(Ctx ctx, OrderTag tag) : ctx_(std::move(ctx)), tag_(tag) {}

    static Element zero(Ctx ctx, OrderTag tag = OrderTag::DerFirst);
    static Element one(Ctx ctx, OrderTag tag = OrderTag::DerFirst);
    static Element coefficient(Ctx ctx, const RatFunc& f, OrderTag tag = OrderTag::DerFirst);
    static Element generator(Ctx ctx, const Gen& g, OrderTag tag = OrderTag::DerFirst);
    static Element gen_x(Ctx ctx, int site, int copy = 0, OrderTag tag = OrderTag::DerFirst);
    static Element gen_d(Ctx ctx, int site, int copy = 0, OrderTag tag = OrderTag::DerFirst);

    const Ctx& ctx() const { return ctx_; }
    OrderTag tag() const { return tag_; }
    const std::map<Key, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int filtration_degree() const;  // max total exponent degree, -1 for zero

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element scaled(const RatFunc& f) const;       // left coefficient multiple
    Element times_coeff_right(const RatFunc& f) const;
    Element commutator(const Element& o) const { return *this * o - o * *this; }
    Element pow(int k) const;

    Element converted(OrderTag target) const;

    // h-weight: Z^n when every monomial carries the same weight
    std::optional<std::vector<int>> weight() const;
    static std::vector<int> mono_weight(const RingCtx& ctx, const Key& m);

    Element eps_antiauto() const;

    // Normalizes an arbitrary word of generators (left to right).
    static Element word(Ctx ctx, OrderTag tag, const std::vector<Gen>& letters,
                        const RatFunc& coef);
    static Element word(Ctx ctx, OrderTag tag, const std::vector<Gen>& letters);

    std::string str() const;
    static Element parse(Ctx ctx, OrderTag tag, const std::string& text);

  private:
    void add_term(const Key& m, const RatFunc& c);
    // prepend a generator to a normal element (the workhorse)
    Element prepended(const Gen& g) const;
    friend Element prepend_letter(const Gen& g, const Element& e);

    Ctx ctx_;
    OrderTag tag_ = OrderTag::DerFirst;
    std::map<Key, RatFunc> terms_;
};

// Gamma_i = dbar_i x^i (summed over nothing; per copy for N>1 use the copy arg)
Element gamma_element(Element::Ctx ctx, int site, int copy = 0, OrderTag tag = OrderTag::DerFirst);

// Verifies the internal relation stock on a context: Gamma exchange
// relations, commuting Gamma family, and both twisted commuting families.
Report self_test_relations(Element::Ctx ctx);

std::vector<std::vector<RatFunc>> invert_ratfunc_matrix(const std::vector<std::vector<RatFunc>>& m);

}  // namespace hdiff

#endif
