#pragma once

#include "sl2char/cyclotomic.hpp"
#include "sl2char/fq.hpp"
#include "sl2char/labels.hpp"
#include "sl2char/quadg.hpp"

#include <utility>

namespace sl2char {

enum class UnipClass { U0, U1, Ueps };
enum class NilpClass { n0, n1, neps };

// 2x2 matrix over F_p.
struct MatFq {
    int p;
    int a, b, c, d;

    MatFq(int p_, long a_, long b_, long c_, long d_)
        : p(p_),
          a(static_cast<int>(mod_pos(a_, p_))),
          b(static_cast<int>(mod_pos(b_, p_))),
          c(static_cast<int>(mod_pos(c_, p_))),
          d(static_cast<int>(mod_pos(d_, p_))) {}

    static MatFq identity(int p) { return MatFq(p, 1, 0, 0, 1); }
    long det() const { return mod_pos(static_cast<long>(a) * d - static_cast<long>(b) * c, p); }
    long trace() const { return mod_pos(static_cast<long>(a) + d, p); }
    MatFq operator*(const MatFq& o) const {
        return MatFq(p, static_cast<long>(a) * o.a + static_cast<long>(b) * o.c,
                     static_cast<long>(a) * o.b + static_cast<long>(b) * o.d,
                     static_cast<long>(c) * o.a + static_cast<long>(d) * o.c,
                     static_cast<long>(c) * o.b + static_cast<long>(d) * o.d);
    }
    MatFq inv_sl2() const {
        if (det() != 1) throw std::domain_error("inv_sl2 on a matrix with det != 1");
        return MatFq(p, d, -b, -c, a);
    }
    bool operator==(const MatFq& o) const {
        return p == o.p && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// Trace-zero matrix [z x; y -z] over F_p.
struct Sl2Fq {
    int p;
    int z, x, y;

    Sl2Fq(int p_, long z_, long x_, long y_)
        : p(p_),
          z(static_cast<int>(mod_pos(z_, p_))),
          x(static_cast<int>(mod_pos(x_, p_))),
          y(static_cast<int>(mod_pos(y_, p_))) {}

    bool is_zero() const { return z == 0 && x == 0 && y == 0; }
    // -det = z^2 + xy
    long minus_det() const { return mod_pos(static_cast<long>(z) * z + static_cast<long>(x) * y, p); }
    bool is_nilpotent() const { return minus_det() == 0; }
    bool operator==(const Sl2Fq& o) const {
        return p == o.p && z == o.z && x == o.x && y == o.y;
    }
};

// Conjugation orbit of a nonzero nilpotent: the class carries the square
// class of the upper-right entry after triangularization.
NilpClass classify_nilpotent(const Sl2Fq& n);

// Classification of unipotent elements of SL(2,F_q); throws when the input
// is not unipotent.
UnipClass classify_unipotent(const MatFq& m);

inline NilpClass nilp_of_unip(UnipClass u) {
    switch (u) {
        case UnipClass::U0: return NilpClass::n0;
        case UnipClass::U1: return NilpClass::n1;
        default: return NilpClass::neps;
    }
}

// Residue-field Cayley transform (1 + N/2)(1 - N/2)^{-1} of a nilpotent.
MatFq cay_fq(const Sl2Fq& n);

// Green's function values on nilpotent classes: (1-q, 1, 1).
Rat q_t(NilpClass c, long q);
// Cuspidal-difference values on nilpotent classes: (0, g*s, -g*s) where
// s = sgn(-1); fixed by the value at [0 1; 0 0].
QuadGNum q_g(NilpClass c, int p);

// Coefficients (a_T, a_G) expressing a cuspidal character on unipotents.
std::pair<Rat, Rat> chi_coeffs(CuspLabel sigma);

// Partial character sums over square / non-square classes:
// gamma_sig(a) = sum over {sgn(x) = sig} of zeta^(x*a).
CycloNum gamma_val(int sig, const FqElem& a);

// gamma_{+/-}(1) as elements of Q(g): (-1 +/- g)/2.
QuadGNum gamma_one(int p, int sig);

}  // namespace sl2char
