#pragma once

#include "sl2char/cyclotomic.hpp"
#include "sl2char/fq.hpp"

#include <string>

namespace sl2char {

// Element a + b*g of the quadratic subfield of Q(zeta_p), where g is the
// quadratic character sum with g^2 = sgn(-1)*p.
class QuadGNum {
  public:
    explicit QuadGNum(int p) : p_(p), a_(rat(0)), b_(rat(0)) { check(); }
    QuadGNum(int p, Rat a, Rat b) : p_(p), a_(std::move(a)), b_(std::move(b)) { check(); }

    static QuadGNum zero(int p) { return QuadGNum(p); }
    static QuadGNum from_rat(int p, const Rat& a) { return QuadGNum(p, a, rat(0)); }
    static QuadGNum g(int p) { return QuadGNum(p, rat(0), rat(1)); }

    int p() const { return p_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    // g^2 as a rational: sgn(-1) * p.
    Rat gsq() const { return rat(sign_minus_one(p_) * static_cast<long>(p_)); }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadGNum operator-() const { return QuadGNum(p_, -a_, -b_); }
    QuadGNum operator+(const QuadGNum& o) const { check_same(o); return QuadGNum(p_, a_ + o.a_, b_ + o.b_); }
    QuadGNum operator-(const QuadGNum& o) const { return *this + (-o); }
    QuadGNum operator*(const QuadGNum& o) const {
        check_same(o);
        return QuadGNum(p_, a_ * o.a_ + b_ * o.b_ * gsq(), a_ * o.b_ + b_ * o.a_);
    }
    QuadGNum operator*(const Rat& r) const { return QuadGNum(p_, a_ * r, b_ * r); }
    QuadGNum inverse() const {
        Rat nrm = a_ * a_ - b_ * b_ * gsq();
        if (nrm == 0) throw std::domain_error("inverse of zero in Q(g)");
        return QuadGNum(p_, a_ / nrm, -b_ / nrm);
    }
    QuadGNum operator/(const QuadGNum& o) const { return *this * o.inverse(); }
    bool operator==(const QuadGNum& o) const { return p_ == o.p_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadGNum& o) const { return !(*this == o); }

    CycloNum embed() const { return gauss_sum(p_) * b_ + CycloNum::from_rat(p_, a_); }

    std::string str() const;

  private:
    void check() const {
        if (!is_odd_prime(p_)) throw std::domain_error("QuadGNum requires an odd prime");
    }
    void check_same(const QuadGNum& o) const {
        if (p_ != o.p_) throw std::invalid_argument("QuadGNum fields with different p");
    }
    int p_;
    Rat a_, b_;
};

// Inverse of embed(); throws when c is not in the Q-span of {1, g}.
QuadGNum as_quadg(const CycloNum& c);

}  // namespace sl2char
