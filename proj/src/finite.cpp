#include "sl2char/finite.hpp"

namespace sl2char {

NilpClass classify_nilpotent(const Sl2Fq& n) {
    if (!n.is_nilpotent()) throw std::domain_error("classify_nilpotent: not nilpotent");
    if (n.is_zero()) return NilpClass::n0;
    // A nonzero nilpotent [z x; y -z] is conjugate to [0 m; 0 0] with
    // sgn(m) = sgn(x) when x != 0, and sgn(m) = sgn(-1)*sgn(y) when x = 0
    // (in which case z = 0 as well, by z^2 + xy = 0).
    int s;
    if (n.x != 0)
        s = sgn_mod(n.p, n.x);
    else
        s = sgn_mod(n.p, n.y) * sign_minus_one(n.p);
    return s == +1 ? NilpClass::n1 : NilpClass::neps;
}

UnipClass classify_unipotent(const MatFq& m) {
    if (m.det() != 1 || m.trace() != 2)
        throw std::domain_error("classify_unipotent: not unipotent");
    Sl2Fq n(m.p, m.a - 1, m.b, m.c);
    // (m - 1)^2 = 0 requires z^2 + xy = 0 together with trace 0, i.e.
    // d - 1 = -(a - 1).
    if (mod_pos(static_cast<long>(m.a) - 1 + m.d - 1, m.p) != 0 || !n.is_nilpotent())
        throw std::domain_error("classify_unipotent: not unipotent");
    if (n.is_zero()) return UnipClass::U0;
    return classify_nilpotent(n) == NilpClass::n1 ? UnipClass::U1 : UnipClass::Ueps;
}

MatFq cay_fq(const Sl2Fq& n) {
    if (!n.is_nilpotent()) throw std::domain_error("cay_fq: not nilpotent");
    long half = inv_mod(2, n.p);
    // (1 + N/2)^2 since (1 - N/2)^{-1} = 1 + N/2 for nilpotent N.
    MatFq u(n.p, 1 + n.z * half, n.x * half, n.y * half, 1 - n.z * half);
    return u * u;
}

Rat q_t(NilpClass c, long q) {
    if (!is_odd_prime(q)) throw std::domain_error("q_t requires an odd prime");
    return c == NilpClass::n0 ? rat(1 - q) : rat(1);
}

QuadGNum q_g(NilpClass c, int p) {
    int s = sign_minus_one(p);
    switch (c) {
        case NilpClass::n0: return QuadGNum::zero(p);
        case NilpClass::n1: return QuadGNum(p, rat(0), rat(s));
        default: return QuadGNum(p, rat(0), rat(-s));
    }
}

std::pair<Rat, Rat> chi_coeffs(CuspLabel sigma) {
    switch (sigma) {
        case CuspLabel::sigma_theta: return {rat(-1), rat(0)};
        case CuspLabel::sigma_plus: return {rat(-1, 2), rat(-1, 2)};
        default: return {rat(-1, 2), rat(1, 2)};
    }
}

CycloNum gamma_val(int sig, const FqElem& a) {
    if (sig != +1 && sig != -1) throw std::invalid_argument("gamma_val sign must be +1 or -1");
    CycloNum acc(a.p);
    for (long x = 1; x < a.p; x++) {
        if (sgn_mod(a.p, x) != sig) continue;
        acc = acc + CycloNum::zeta_pow(a.p, x * a.v);
    }
    return acc;
}

QuadGNum gamma_one(int p, int sig) {
    return QuadGNum(p, rat(-1, 2), rat(sig, 2));
}

}  // namespace sl2char
