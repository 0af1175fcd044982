#include "sl2char/cyclotomic.hpp"

#include "sl2char/fq.hpp"

#include <sstream>

namespace sl2char {

CycloNum::CycloNum(int p) : p_(p), c_(static_cast<size_t>(p - 1), rat(0)) {
    if (!is_odd_prime(p)) throw std::domain_error("cyclotomic base must be an odd prime");
}

CycloNum::CycloNum(int p, std::vector<Rat> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_odd_prime(p)) throw std::domain_error("cyclotomic base must be an odd prime");
    if (c_.size() != static_cast<size_t>(p - 1))
        throw std::invalid_argument("cyclotomic coefficient vector must have length p-1");
}

CycloNum CycloNum::from_rat(int p, const Rat& a) {
    CycloNum r(p);
    r.c_[0] = a;
    return r;
}

CycloNum CycloNum::zeta_pow(int p, long k) {
    CycloNum r(p);
    long e = ((k % p) + p) % p;
    if (e < p - 1) {
        r.c_[static_cast<size_t>(e)] = rat(1);
    } else {
        // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        for (auto& x : r.c_) x = rat(-1);
    }
    return r;
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0) return false;
    return true;
}

void CycloNum::check_same(const CycloNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic fields with different p");
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    check_same(o);
    CycloNum r = *this;
    for (size_t i = 0; i < c_.size(); i++) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    check_same(o);
    // Convolve, then fold zeta^k for k >= p-1 using
    // zeta^(p-1) = -(1 + ... + zeta^(p-2)) and zeta^p = 1.
    std::vector<Rat> conv(2 * c_.size() - 1, rat(0));
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < c_.size(); j++) conv[i + j] += c_[i] * o.c_[j];
    }
    CycloNum r(p_);
    size_t n = c_.size();  // p-1
    for (size_t k = 0; k < conv.size(); k++) {
        if (conv[k] == 0) continue;
        size_t e = k % static_cast<size_t>(p_);
        if (e < n) {
            r.c_[e] += conv[k];
        } else {
            for (auto& x : r.c_) x -= conv[k];
        }
    }
    return r;
}

CycloNum CycloNum::operator*(const Rat& a) const {
    CycloNum r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

bool CycloNum::operator==(const CycloNum& o) const { return p_ == o.p_ && c_ == o.c_; }

CycloNum CycloNum::mul_zeta_pow(long k) const {
    CycloNum r(p_);
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        long e = (static_cast<long>(i) + k) % p_;
        if (e < 0) e += p_;
        if (e < p_ - 1) {
            r.c_[static_cast<size_t>(e)] += c_[i];
        } else {
            for (auto& x : r.c_) x -= c_[i];
        }
    }
    return r;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    // Solve (this * x) = 1 as a dense linear system over Q in the power basis.
    size_t n = c_.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, rat(0)));
    for (size_t j = 0; j < n; j++) {
        CycloNum col = mul_zeta_pow(static_cast<long>(j));
        for (size_t i = 0; i < n; i++) m[i][j] = col.c_[i];
    }
    m[0][n] = rat(1);
    // Gaussian elimination with exact pivots.
    size_t row = 0;
    std::vector<size_t> pivot_col(n, 0);
    for (size_t col = 0; col < n && row < n; col++) {
        size_t pr = row;
        while (pr < n && m[pr][col] == 0) pr++;
        if (pr == n) continue;
        std::swap(m[pr], m[row]);
        Rat inv = rat(1) / m[row][col];
        for (size_t j = col; j <= n; j++) m[row][j] *= inv;
        for (size_t i = 0; i < n; i++) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= n; j++) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = col;
        row++;
    }
    if (row != n) throw std::domain_error("cyclotomic inverse: singular multiplication matrix");
    std::vector<Rat> x(n, rat(0));
    for (size_t i = 0; i < n; i++) x[pivot_col[i]] = m[i][n];
    return CycloNum(p_, std::move(x));
}

std::string CycloNum::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); i++) {
        if (i) os << ",";
        os << rat_str(c_[i]);
    }
    os << "]";
    return os.str();
}

CycloNum gauss_sum(int p) {
    CycloNum g(p);
    for (long x = 1; x < p; x++) {
        int s = sgn_mod(p, x);
        g = g + CycloNum::zeta_pow(p, x) * rat(s);
    }
    return g;
}

}  // namespace sl2char
