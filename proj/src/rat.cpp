#include "hdiff/rat.hpp"

namespace hdiff {

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

bool rat_sqrt(const Rat& r, Rat& root) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) { root = 0; return true; }
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) return false;
    if (rn * rn != num) return false;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) return false;
    if (rd * rd != den) return false;
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace hdiff
