#include "sl2char/poly.hpp"

#include <sstream>

namespace sl2char {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& a, int deg) {
    if (a == 0 || deg < 0) return zero();
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, rat(0));
    c.back() = a;
    return Poly(std::move(c));
}

Poly Poly::geometric(int n) {
    if (n <= 0) return zero();
    return Poly(std::vector<Rat>(static_cast<size_t>(n), rat(1)));
}

const Rat& Poly::coeff(int i) const {
    static const Rat kZero = rat(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), rat(0));
    for (size_t i = 0; i < c_.size(); i++) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, rat(0));
    for (size_t i = 0; i < c_.size(); i++)
        for (size_t j = 0; j < o.c_.size(); j++) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& a) const {
    Poly r = *this;
    for (auto& x : r.c_) x *= a;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {zero(), rem};
    std::vector<Rat> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat f = rem.leading() / d.leading();
        q[static_cast<size_t>(k)] = f;
        rem = rem - d * monomial(f, k);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (rat(1) / leading());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = rat(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << mag.get_str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace sl2char
