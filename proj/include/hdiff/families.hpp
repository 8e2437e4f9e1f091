#ifndef HDIFF_FAMILIES_HPP
#define HDIFF_FAMILIES_HPP

#include <optional>
#include <tuple>

#include "hdiff/ratfunc.hpp"

namespace hdiff {

// Helpers over the Cartan variables h_1..h_n (the first `n` slots of a spec).
// All indices below are 0-based sites.

MPoly hdiff_var(VarSpec spec, int i);               // h_i
MPoly hdiff_diff(VarSpec spec, int i, int j);       // h_i - h_j

MPoly elementary_sym(VarSpec spec, int n, int k);   // e_k(h_1..h_n)
MPoly complete_sym(VarSpec spec, int n, int k);     // H_k(h_1..h_n)
MPoly chi_poly(VarSpec spec, int n, int i);         // prod_{s!=i}(h_i - h_s)
MPoly psi_poly(VarSpec spec, int n, int i);         // prod_{s>i}(h_i - h_s)
MPoly psi_prime_poly(VarSpec spec, int n, int i);   // prod_{s<i}(h_i - h_s)
RatFunc phi_func(VarSpec spec, int n, int i);       // psi_i / psi_i[-eps_i]

// e(t) = prod (1 + h_i t) as coefficients by power of t; index k = e_k.
std::vector<MPoly> elementary_gen(VarSpec spec, int n);
// e(t)/(1+h_i t) = prod_{j!=i} (1 + h_j t), degree n-1 in t.
std::vector<MPoly> elementary_gen_skip(VarSpec spec, int n, int i);

RatFunc finite_difference(const RatFunc& f, int j);  // f - f[-eps_j]

enum class FamilyKind { ElementaryE, CompleteH, Chi, Psi, PsiPrime, Phi };
RatFunc named_family(VarSpec spec, int n, FamilyKind kind, int index);

// Denominator classification against the multiplicative set generated by
// h_i - h_j + k, k integer. `inside` when every denominator factor has that
// form; a non-conforming factor is returned as witness. `indeterminate` when
// the search could not certify either way.
struct UbarLedger {
    enum class Status { Inside, Outside, Indeterminate };
    Status status = Status::Inside;
    // (i, j, k, multiplicity) with i < j, factor h_i - h_j + k
    std::vector<std::tuple<int, int, long, int>> factors;
    MPoly witness;  // offending factor when Outside/Indeterminate
    bool inside() const { return status == Status::Inside; }
};

UbarLedger ubar_membership(const RatFunc& f, int n);

// Splits ledger-form linear factors h_i - h_j + k out of p (i<j, k integer).
// Returns the extracted factors and the residual cofactor.
struct LinearSplit {
    std::vector<std::tuple<int, int, long, int>> factors;
    MPoly residual;
    bool probe_failed = false;
    bool complete_to_constant() const { return residual.is_constant(); }
};
LinearSplit split_cartan_linears(const MPoly& p, int n);

// Integer roots of a univariate rational-coefficient polynomial (exact).
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs);

}  // namespace hdiff

#endif
