#ifndef HDIFF_CENTER_HPP
#define HDIFF_CENTER_HPP

#include "hdiff/consistency.hpp"

namespace hdiff {

// rho(t) coefficients by power of t (degree <= n-1), solving the
// finite-difference system Delta_j rho(t) = (e(t)/(1+h_j t)) sigma_j with the
// free polynomial part pinned to zero. Throws when the system has no solution
// for the given potential.
std::vector<RatFunc> rho_poly(const SigmaSpec& sigma, VarSpec spec);

// c_k = sum_j (d e_k / d h_j) Gamma_j - rho_k, k = 1..n (index 0 = c_1)
std::vector<Element> central_elements(Element::Ctx ctx, const SigmaSpec& sigma);

// commutators of e with every generator (and the Cartan coefficients)
Report verify_centrality(Element::Ctx ctx, const Element& e, const std::string& label);

// V V^{-1} = Id and Gamma_j recovered from the c_k
Report gamma_recovery(Element::Ctx ctx, const SigmaSpec& sigma);

// A^a_b = sum_i dbar_{ia} x^{ib} (upper index = derivative copy)
Element glN_generator(Element::Ctx ctx, int a, int b);
// M^i_j = sum_b dbar_{jb} x^{ib}
Element m_generator(Element::Ctx ctx, int i, int j);
Report glN_check(Element::Ctx ctx);

struct QuadCenterResult {
    std::vector<Element> basis;  // kernel of the commutator conditions
    int dim_mod_constants = 0;
    bool bound_limited = false;  // solution touched the degree bound
};
// Ansatz C = sum_i M^i_i f_i + g over coefficients of degree <= degree_bound
// (plus single difference-factor denominators); solves [C, x^{ia}] = 0.
QuadCenterResult quadratic_center_scan(Element::Ctx ctx, int degree_bound,
                                       bool with_denominators = true);

bool element_in_span(const Element& target, const std::vector<Element>& span);

}  // namespace hdiff

#endif
