#include "sl2char/motive.hpp"

namespace sl2char {

RatFuncL::RatFuncL(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFuncL RatFuncL::operator-() const {
    RatFuncL r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFuncL RatFuncL::operator+(const RatFuncL& o) const {
    return RatFuncL(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncL RatFuncL::operator-(const RatFuncL& o) const { return *this + (-o); }

RatFuncL RatFuncL::operator*(const RatFuncL& o) const {
    return RatFuncL(num_ * o.num_, den_ * o.den_);
}

RatFuncL RatFuncL::operator/(const RatFuncL& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFuncL(num_ * o.den_, den_ * o.num_);
}

Rat RatFuncL::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole of rational function at L = " + rat_str(x));
    return num_.eval(x) / d;
}

std::string RatFuncL::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string MotiveElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = b_.str() + "*S";
    if (a_.is_zero()) return s;
    return a_.str() + " + " + s;
}

Rat trfrob(const MotiveElem& m, long q) {
    if (!is_odd_prime(q)) throw std::domain_error("trfrob requires an odd prime");
    Rat x = rat(q);
    Rat s_points = rat(1 + sign_minus_one(q));  // point count of x^2 = -1
    return m.a().eval(x) + m.b().eval(x) * s_points;
}

}  // namespace sl2char
