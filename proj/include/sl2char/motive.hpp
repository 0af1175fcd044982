#pragma once

#include "sl2char/poly.hpp"

#include <string>

namespace sl2char {

// Reduced fraction of polynomials in L with monic denominator.
class RatFuncL {
  public:
    RatFuncL() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFuncL(Poly num, Poly den);

    static RatFuncL zero() { return RatFuncL(); }
    static RatFuncL one() { return from_poly(Poly::one()); }
    static RatFuncL from_poly(Poly p) { return RatFuncL(std::move(p), Poly::one()); }
    static RatFuncL from_rat(const Rat& a) { return from_poly(Poly::constant(a)); }
    static RatFuncL L() { return from_poly(Poly::sym()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly::one(); }

    RatFuncL operator-() const;
    RatFuncL operator+(const RatFuncL& o) const;
    RatFuncL operator-(const RatFuncL& o) const;
    RatFuncL operator*(const RatFuncL& o) const;
    RatFuncL operator/(const RatFuncL& o) const;
    bool operator==(const RatFuncL& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncL& o) const { return !(*this == o); }

    // Evaluation at L = x; throws on a pole.
    Rat eval(const Rat& x) const;
    std::string str() const;

  private:
    Poly num_, den_;
};

// Element a + b*S of the value ring, where S*S = 2*S.
// Specialization at an odd prime q sends S to the number of points of
// x^2 = -1 over F_q, namely 1 + sgn_q(-1).
class MotiveElem {
  public:
    MotiveElem() = default;
    explicit MotiveElem(RatFuncL a) : a_(std::move(a)) {}
    MotiveElem(RatFuncL a, RatFuncL b) : a_(std::move(a)), b_(std::move(b)) {}

    static MotiveElem zero() { return MotiveElem(); }
    static MotiveElem one() { return MotiveElem(RatFuncL::one()); }
    static MotiveElem L() { return MotiveElem(RatFuncL::L()); }
    static MotiveElem S() { return MotiveElem(RatFuncL::zero(), RatFuncL::one()); }
    static MotiveElem from_rat(const Rat& r) { return MotiveElem(RatFuncL::from_rat(r)); }
    static MotiveElem from_ratfunc(RatFuncL f) { return MotiveElem(std::move(f)); }

    const RatFuncL& a() const { return a_; }
    const RatFuncL& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    MotiveElem operator-() const { return MotiveElem(-a_, -b_); }
    MotiveElem operator+(const MotiveElem& o) const { return MotiveElem(a_ + o.a_, b_ + o.b_); }
    MotiveElem operator-(const MotiveElem& o) const { return MotiveElem(a_ - o.a_, b_ - o.b_); }
    MotiveElem operator*(const MotiveElem& o) const {
        // (a1 + b1 S)(a2 + b2 S) with S^2 = 2S.
        return MotiveElem(a_ * o.a_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_ * RatFuncL::from_rat(rat(2)));
    }
    bool operator==(const MotiveElem& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const MotiveElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    RatFuncL a_, b_;
};

// Trace of Frobenius at an odd prime q: L -> q, S -> #{x^2 = -1 over F_q}.
Rat trfrob(const MotiveElem& m, long q);

}  // namespace sl2char
