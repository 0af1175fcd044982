#pragma once

#include "sl2char/rational.hpp"

#include <stdexcept>

namespace sl2char {

// Quadratic character of F_p extended by zero: -1, 0, or +1.
int sgn_mod(int p, long x);

// Least positive quadratic non-residue mod p.
int smallest_nonsquare(int p);

inline long mod_pos(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

long inv_mod(long x, long m);  // inverse of a unit, any modulus

// Element of the prime field F_p.
struct FqElem {
    int p;
    int v;  // in [0, p)

    FqElem(int p_, long value) : p(p_), v(static_cast<int>(mod_pos(value, p_))) {
        if (!is_odd_prime(p_)) throw std::domain_error("FqElem requires an odd prime field");
    }

    bool is_zero() const { return v == 0; }
    FqElem operator+(const FqElem& o) const { return FqElem(p, v + o.v); }
    FqElem operator-(const FqElem& o) const { return FqElem(p, v - o.v); }
    FqElem operator*(const FqElem& o) const { return FqElem(p, static_cast<long>(v) * o.v); }
    FqElem operator-() const { return FqElem(p, -v); }
    FqElem inv() const {
        if (v == 0) throw std::domain_error("inverse of zero in F_p");
        return FqElem(p, inv_mod(v, p));
    }
    bool operator==(const FqElem& o) const { return p == o.p && v == o.v; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }
};

inline int sgn(const FqElem& x) { return sgn_mod(x.p, x.v); }

}  // namespace sl2char
