#ifndef HDIFF_REPS_HPP
#define HDIFF_REPS_HPP

#include "hdiff/center.hpp"

namespace hdiff {

// Scalars in Q or in a declared quadratic extension Q(theta), theta^2 = c1 theta + c0.
struct FieldSpec {
    bool quadratic = false;
    Rat c1 = Rat(0), c0 = Rat(0);
    bool operator==(const FieldSpec& o) const {
        return quadratic == o.quadratic && c1 == o.c1 && c0 == o.c0;
    }
};

struct FVal {
    Rat a = Rat(0), b = Rat(0);  // a + b theta
    bool operator==(const FVal& o) const { return a == o.a && b == o.b; }
};

FVal fval(const Rat& r);
bool fis_zero(const FVal& v);
FVal fadd(const FVal& u, const FVal& v);
FVal fsub(const FVal& u, const FVal& v);
FVal fneg(const FVal& u);
FVal fmul(const FieldSpec& fs, const FVal& u, const FVal& v);
FVal finv(const FieldSpec& fs, const FVal& u);
std::string fstr(const FVal& v);

// dense matrix over the field
struct FMat {
    int rows = 0, cols = 0;
    std::vector<FVal> e;
    FMat() = default;
    FMat(int r, int c) : rows(r), cols(c), e(r * c) {}
    FVal& at(int r, int c) { return e[r * cols + c]; }
    const FVal& at(int r, int c) const { return e[r * cols + c]; }
    static FMat identity(int d);
    static FMat zero(int d) { return FMat(d, d); }
    bool is_zero() const;
    bool operator==(const FMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

FMat madd(const FMat& a, const FMat& b);
FMat msub(const FMat& a, const FMat& b);
FMat mmul(const FieldSpec& fs, const FMat& a, const FMat& b);
FMat mscale(const FieldSpec& fs, const FVal& c, const FMat& a);
std::optional<FMat> minverse(const FieldSpec& fs, const FMat& a);
int mrank(const FieldSpec& fs, FMat a);

// evaluate polynomial/rational coefficients on the commuting Cartan matrices
FMat eval_mpoly(const FieldSpec& fs, const MPoly& p, const std::vector<FMat>& hmats);
std::optional<FMat> eval_ratfunc(const FieldSpec& fs, const RatFunc& f, const std::vector<FMat>& hmats);

// candidate finite-dimensional module: matrices for every generator
struct MatrixRep {
    int n = 1, N = 1, dim = 0;
    FieldSpec field;
    std::vector<FMat> x, d;  // index site * N + copy
    std::vector<FMat> h;     // per site
    const FMat& xm(int site, int copy = 0) const { return x[site * N + copy]; }
    const FMat& dm(int site, int copy = 0) const { return d[site * N + copy]; }
};

// every defining relation as a matrix identity, sigma evaluated through the
// functional calculus on the commuting h-matrices
Report verify_module(const std::vector<RatFunc>& sigma_sites, const MatrixRep& rep);

// --- weight modules -------------------------------------------------------

// vector in a weight module: basis monomial exponents -> coefficient in the
// rational functions of the weight symbols
struct ModuleVec {
    VarSpec lspec;  // {0, n}: the weight symbols
    std::map<std::vector<int>, RatFunc> terms;
    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& k, const RatFunc& c);
    bool operator==(const ModuleVec& o) const { return terms == o.terms; }
};

enum class ModuleMode { Lowest, Highest };

// weights as rational functions of the weight symbols (symbolic lambda by
// default; constants for a concrete weight)
std::vector<RatFunc> symbolic_weight(int n);
std::vector<RatFunc> rational_weight(int n, const std::vector<Rat>& lambda);

// action of a ring element on a weight-module vector
ModuleVec module_action(const Element& e, ModuleMode mode, const std::vector<RatFunc>& lambda,
                        const ModuleVec& v);
ModuleVec basis_vector(int n, const std::vector<RatFunc>& lambda, const std::vector<int>& expo = {});

// scalar of c_k on the lowest-weight module plus the sign comparison against
// rho_k at the shifted weight
struct CentralCharacter {
    std::vector<RatFunc> scalar;     // computed action of c_k
    std::vector<RatFunc> rho_down;   // rho_k shifted by -(1,..,1)
    int sign = 0;                    // +1 / -1 when the scalars match sign * rho_down
};
CentralCharacter central_character_lowest(Element::Ctx ctx, const SigmaSpec& sigma,
                                          const std::vector<RatFunc>& lambda);

// least d_i >= 0 with (sigma - sigma[-(d_i+1)eps_i])|_lambda = 0, searched up
// to the bound; nullopt when no site admits one
std::optional<std::vector<int>> finite_module_dims(const SigmaSpec& sigma,
                                                   const std::vector<Rat>& lambda, int bound = 64);

// highest-weight quotient with dbar_i^{d_i+1} v = 0 on the monomial basis
MatrixRep build_matrix_module(Element::Ctx ctx, const std::vector<Rat>& lambda,
                              const std::vector<int>& dims);

struct IrreducibilityResult {
    bool analytic_irreducible = false;
    bool oracle_irreducible = false;
    bool oracle_reducible = false;        // a proper invariant subspace was found
    bool indecomposable_certified = false;  // commutant has no nontrivial idempotent
    bool commutant_undetermined = false;
    int algebra_dim = 0;
    int commutant_dim = 0;
    std::string witness;
};
IrreducibilityResult irreducibility_test(const SigmaSpec& sigma, const std::vector<Rat>& lambda,
                                         const std::vector<int>& dims, const MatrixRep& rep);
// the matrix-side part alone (no weight data), used for the fixtures
IrreducibilityResult invariant_subspace_scan(const MatrixRep& rep);

// the three indecomposable fixtures
struct Fixture {
    std::string name;
    MatrixRep rep;
    SigmaSpec sigma;
    std::vector<RatFunc> sigma_sites;  // realized over {n,0}
};
Fixture fixture_nondiagonalizable();
Fixture fixture_sixth_root();
Fixture fixture_shifted_chain(int p, const Rat& l1, const Rat& l2);

// Sum_{k<m} sigma_i[-k eps_i] = sigma - sigma[-m eps_i], checked symbolically
bool telescoping_identity(const SigmaSpec& sigma, int i, int m);

// Informational probe: for sigma = H_m, n <= 2, m <= 4, search for rational
// weights admitting finite-dimensional quotients and report the findings
// against the expectation "modules exist iff m > n". Never a hard test: over
// the rationals some vanishing loci have no points even when m > n.
struct ConjectureProbe {
    struct Entry {
        int m = 0, n = 0;
        bool expects_modules = false;  // m > n
        bool found_rational_weight = false;
        std::string note;
    };
    std::vector<Entry> entries;
    bool sound = true;  // no witness found where m <= n
    std::string str() const;
};
ConjectureProbe conjecture_probe(uint64_t seed);

}  // namespace hdiff

#endif
