#ifndef HDIFF_RMATRIX_HPP
#define HDIFF_RMATRIX_HPP

#include <map>
#include <tuple>

#include "hdiff/families.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

// Operator on the twofold tensor space with rational-function entries,
// stored sparsely; only ice-compatible index patterns are ever nonzero.
class ROperator {
  public:
    using Key = std::tuple<int, int, int, int>;  // upper i,j lower k,l (0-based)

    ROperator(int n, VarSpec spec) : n_(n), spec_(spec) {}

    int n() const { return n_; }
    VarSpec spec() const { return spec_; }
    RatFunc entry(int i, int j, int k, int l) const;
    void set(int i, int j, int k, int l, const RatFunc& v);
    const std::map<Key, RatFunc>& entries() const { return e_; }

  private:
    int n_;
    VarSpec spec_;
    std::map<Key, RatFunc> e_;
};

ROperator rhat(int n, VarSpec spec);
ROperator rhat(int n);
ROperator psi_skew(int n, VarSpec spec);
ROperator psi_skew(int n);

// Verifies: involutivity, shift invariance, ice condition, skew inverse,
// and the dynamical Yang-Baxter equation. Failures are report entries.
Report check_r_properties(int n);
Report check_r_properties(const ROperator& r, const ROperator& psi);

}  // namespace hdiff

#endif
