#ifndef HDIFF_CONSISTENCY_HPP
#define HDIFF_CONSISTENCY_HPP

#include "hdiff/ring.hpp"

namespace hdiff {

// Univariate rational function of one formal argument, kept as num/den pair
// over a one-variable spec. Used for the per-site data of a potential.
struct UniRat {
    static VarSpec tspec() { return VarSpec{0, 1}; }
    RatFunc f = RatFunc(tspec());

    static UniRat zero() { return UniRat{}; }
    static UniRat poly(const std::vector<Rat>& coeffs);
    bool is_zero() const { return f.is_zero(); }
    bool is_polynomial() const { return f.is_polynomial(); }
    bool operator==(const UniRat& o) const { return f == o.f; }
    UniRat operator+(const UniRat& o) const { return UniRat{f + o.f}; }
    UniRat operator-(const UniRat& o) const { return UniRat{f - o.f}; }
    UniRat scaled(const Rat& c) const { return UniRat{f * RatFunc::constant(tspec(), c)}; }
    // polynomial part / proper part of the univariate fraction
    UniRat poly_part() const;
    UniRat proper_part() const { return *this - poly_part(); }
    std::vector<Rat> poly_coeffs() const;  // requires is_polynomial
    // substitute the Cartan variable h_k for the formal argument
    RatFunc at_site(VarSpec spec, int k) const;
    std::string str() const;
};

// A potential in canonical form: per-site parts r_k (the polynomial
// components are mean-zero across sites), plus the symmetric part as
// coefficients of the complete symmetric polynomials H_m.
struct SigmaSpec {
    int n = 1;
    std::vector<UniRat> site;   // size n
    std::vector<Rat> hpart;     // hpart[m] * H_m, m >= 0

    static SigmaSpec complete_h(int n, int m, const Rat& coeff = Rat(1));
    static SigmaSpec from_sites(int n, std::vector<UniRat> site_parts);

    RatFunc realize(VarSpec spec) const;
    RatFunc realize() const { return realize(VarSpec{n, 0}); }
    std::vector<RatFunc> sigmas(VarSpec spec) const;  // Delta_i of the potential
    // full per-site numerator: site part plus t^{m+n-1} per H_m component
    UniRat full_site(int k) const;
    void canonicalize();
    bool is_symmetric_polynomial() const;  // all site parts vanish
    std::string str() const;
};

// residual matrix r_{ij} = h_ij Delta_j sigma_i - (sigma_i - sigma_j)
std::vector<std::vector<RatFunc>> delta_system_residual(const std::vector<RatFunc>& sigmas);

// r_{ij} = Delta_i Delta_j (h_ij * f), zero iff f solves the one-potential system
bool delta_system_holds(const RatFunc& f, int n, std::pair<int, int>* witness = nullptr);

struct DecomposeResult {
    bool in_wbar = false;
    std::pair<int, int> witness{-1, -1};  // failing pair when not in wbar
    SigmaSpec spec;
    std::string note;
};
DecomposeResult w_decompose(const RatFunc& sigma, int n);

// Inverts the finite-difference map: finds f with Delta_i f = sigma_i for all
// i, normalized so the constant part vanishes. Throws Error with a witness
// message when the system is inconsistent or some sigma_i has no rational
// antiderivative.
RatFunc potential_from_sigmas(const std::vector<RatFunc>& sigmas);

// single-variable discrete antiderivative: F with F - F[-eps_i] = g
std::optional<RatFunc> discrete_antiderivative(const RatFunc& g, int i);

bool zhelobenko_admissible(const SigmaSpec& s);

enum class PbwMode { Analytic, Bruteforce, Both };

// PBW consistency of a context: the analytic mode evaluates the quadratic
// exchange constraints on the zero-order term, the brute-force mode reorders
// every degree-3 overlap word along its two reduction paths.
Report pbw_overlap_check(Element::Ctx ctx, PbwMode mode);

// ring constructor from a potential
std::shared_ptr<const RingCtx> make_ring(int n, int N, const SigmaSpec& sigma);
std::shared_ptr<const RingCtx> make_ring(int n, int N, const RatFunc& potential);

// seeded generator used by the property suites
SigmaSpec random_sigma_spec(uint64_t seed, int n, bool allow_rational_site = true);

}  // namespace hdiff

#endif
