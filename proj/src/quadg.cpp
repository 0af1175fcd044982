#include "sl2char/quadg.hpp"

#include <sstream>

namespace sl2char {

std::string QuadGNum::str() const {
    std::ostringstream os;
    os << rat_str(a_);
    if (b_ != 0) os << " + " << rat_str(b_) << "*g";
    return os.str();
}

QuadGNum as_quadg(const CycloNum& c) {
    int p = c.p();
    CycloNum gv = gauss_sum(p);
    // Solve c = a*1 + b*g coordinatewise in the power basis.  The basis
    // coordinates 1..p-2 of 1 vanish, so b is pinned by any index where g
    // is nonzero there; then verify every coordinate.
    Rat b = rat(0);
    bool found = false;
    for (size_t i = 1; i < gv.coeffs().size(); i++) {
        if (gv.coeffs()[i] != 0) {
            b = c.coeffs()[i] / gv.coeffs()[i];
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("gauss sum has no nonzero higher coordinate");
    Rat a = c.coeffs()[0] - b * gv.coeffs()[0];
    QuadGNum candidate(p, a, b);
    if (candidate.embed() != c)
        throw std::domain_error("cyclotomic number is not in the quadratic subfield Q(g)");
    return candidate;
}

}  // namespace sl2char
