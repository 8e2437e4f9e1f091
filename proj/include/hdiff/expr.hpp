#ifndef HDIFF_EXPR_HPP
#define HDIFF_EXPR_HPP

#include "hdiff/families.hpp"

namespace hdiff {

struct ParseError : Error {
    int column;  // 1-based
    ParseError(const std::string& msg, int col)
        : Error(msg + " at column " + std::to_string(col)), column(col) {}
};

// Expression surface syntax over a fixed registry: rationals, the registry
// symbols, + - * / ^ with nonnegative integer exponents, parentheses, and the
// builtin families e(k), H(k), chi(i), psi(i), psip(i).
struct ExprContext {
    int n = 1;          // number of Cartan variables (for the builtins)
    VarSpec spec;       // target variable layout
    VarNames names;     // one name per variable

    static ExprContext cartan(int n, const std::vector<std::string>& aux = {});
    static ExprContext univariate();  // single symbol t
};

RatFunc parse_expr(const std::string& text, const ExprContext& ctx);

}  // namespace hdiff

#endif
