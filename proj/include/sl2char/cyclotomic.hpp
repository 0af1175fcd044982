#pragma once

#include "sl2char/rational.hpp"

#include <string>
#include <vector>

namespace sl2char {

// Element of Q(zeta_p) for an odd prime p, stored as coefficients of
// 1, zeta, ..., zeta^(p-2) after reduction by 1 + x + ... + x^(p-1).
class CycloNum {
  public:
    explicit CycloNum(int p);
    CycloNum(int p, std::vector<Rat> coeffs);

    static CycloNum zero(int p) { return CycloNum(p); }
    static CycloNum from_rat(int p, const Rat& a);
    // zeta_p^k for any integer k.
    static CycloNum zeta_pow(int p, long k);

    int p() const { return p_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const { return c_[0]; }

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator*(const Rat& a) const;
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // Multiplication by zeta^k, k >= 0.
    CycloNum mul_zeta_pow(long k) const;
    // Field inverse of a nonzero element (dense linear solve; p is small).
    CycloNum inverse() const;

    std::string str() const;

  private:
    void check_same(const CycloNum& o) const;
    int p_;
    std::vector<Rat> c_;  // size p-1
};

// The quadratic character sum sum_x sgn(x) zeta_p^x; its square is sgn(-1)*p.
CycloNum gauss_sum(int p);

}  // namespace sl2char
