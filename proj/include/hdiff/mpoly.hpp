#ifndef HDIFF_MPOLY_HPP
#define HDIFF_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdiff/rat.hpp"

namespace hdiff {

// Variable layout of a polynomial ring: the first `nshift` variables are the
// Cartan generators (subject to the elementary translations), the remaining
// `naux` are inert auxiliary symbols (t, weights, central labels, ...).
struct VarSpec {
    int nshift = 0;
    int naux = 0;
    int size() const { return nshift + naux; }
    bool operator==(const VarSpec& o) const { return nshift == o.nshift && naux == o.naux; }
    bool operator!=(const VarSpec& o) const { return !(*this == o); }
};

// Display names for a VarSpec, used by printers and the parser.
struct VarNames {
    std::vector<std::string> names;
    const std::string& operator[](int i) const { return names[i]; }
    int find(const std::string& s) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return (int)i;
        return -1;
    }
};

VarNames cartan_names(int n, const std::vector<std::string>& aux = {});

using Mono = std::vector<int>;

// Graded lexicographic order; variable 0 is the largest.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

class MPoly {
  public:
    using TermMap = std::map<Mono, Rat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(VarSpec spec) : spec_(spec) {}

    static MPoly zero(VarSpec spec) { return MPoly(spec); }
    static MPoly constant(VarSpec spec, const Rat& c);
    static MPoly variable(VarSpec spec, int i, int power = 1);

    const VarSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono(spec_.size(), 0)); }
    Rat constant_value() const;
    int degree() const;                 // total degree, -1 for zero
    int degree_in(int var) const;
    Rat coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const Rat& c) const;
    MPoly pow(int k) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Exact division; returns std::nullopt when the remainder is nonzero.
    std::optional<MPoly> divide_exact(const MPoly& d) const;

    // h_i -> h_i + v_i on the shiftable block.
    MPoly shift(const std::vector<int>& v) const;

    // Substitute polynomial values for selected variables. Values must share
    // a common spec, which becomes the spec of the result.
    MPoly subst(const std::vector<std::pair<int, MPoly>>& assign, VarSpec out_spec) const;
    MPoly subst_scalars(const std::vector<std::pair<int, Rat>>& assign) const;

    // View as univariate in `var`: coefficient polynomials by power.
    std::vector<MPoly> univariate_in(int var) const;

    Rat content() const;                // signed: content of primitive() is 1, lc(primitive) > 0
    MPoly primitive() const;            // *this / content()
    const Mono* lead_mono() const;      // grlex-largest, nullptr for zero
    Rat lead_coeff() const;

    MPoly derivative(int var) const;

    std::string str(const VarNames& vn) const;

    // Total order for use as a map key (compares term sequences).
    static int compare(const MPoly& a, const MPoly& b);

  private:
    void add_term(const Mono& m, const Rat& c);
    VarSpec spec_;
    TermMap terms_;
    friend struct MPolyLess;
};

struct MPolyLess {
    bool operator()(const MPoly& a, const MPoly& b) const { return MPoly::compare(a, b) < 0; }
};

}  // namespace hdiff

#endif
