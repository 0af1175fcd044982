#pragma once

#include "sl2char/rational.hpp"

#include <string>
#include <vector>

namespace sl2char {

// Dense univariate polynomial over Q. The symbol is conventionally L.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly one() { return constant(rat(1)); }
    static Poly sym() { return Poly({rat(0), rat(1)}); }
    static Poly monomial(const Rat& a, int deg);
    // 1 + L + ... + L^(n-1); zero for n <= 0.
    static Poly geometric(int n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    Rat leading() const { return is_zero() ? rat(0) : c_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& a) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;
    static Poly gcd(Poly a, Poly b);

    Rat eval(const Rat& x) const;
    std::string str(const std::string& var = "L") const;

  private:
    void trim();
    std::vector<Rat> c_;  // c_[i] is the coefficient of L^i
};

}  // namespace sl2char
