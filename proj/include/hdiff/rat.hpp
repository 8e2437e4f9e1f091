#ifndef HDIFF_RAT_HPP
#define HDIFF_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hdiff {

// Exact rational scalar. mpq_class already keeps canonical form
// (reduced, positive denominator).
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q".
Rat parse_rat(const std::string& s);

// Integer square root test: returns true and sets root if r is the square
// of a rational.
bool rat_sqrt(const Rat& r, Rat& root);

}  // namespace hdiff

#endif
