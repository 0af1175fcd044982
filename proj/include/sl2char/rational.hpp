#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sl2char {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a pair of machine integers.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serialized as "num/den" with den always explicit, e.g. "-3/5", "7/1".
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit in long: " + rat_str(r));
    return r.get_num().get_si();
}

inline Int pow_int(long base, unsigned exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

inline bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// sgn_q(-1): +1 when q = 1 mod 4, -1 when q = 3 mod 4.
inline int sign_minus_one(long q) { return q % 4 == 1 ? +1 : -1; }

}  // namespace sl2char
