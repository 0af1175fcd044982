#include "sl2char/tables.hpp"

#include <sstream>

namespace sl2char {

namespace {

MotiveElem geom(int n) {
    // (L^n - 1)/(L - 1) = 1 + L + ... + L^(n-1)
    return MotiveElem::from_ratfunc(RatFuncL::from_poly(Poly::geometric(n)));
}

MotiveElem Lpow(int n) {
    return MotiveElem::from_ratfunc(RatFuncL::from_poly(Poly::monomial(rat(1), n)));
}

MotiveElem half_edge(int n) {
    // (1/2)(L + 1) L^(n-1)
    Poly p = (Poly::sym() + Poly::one()) * Poly::monomial(rat(1, 2), n - 1);
    return MotiveElem::from_ratfunc(RatFuncL::from_poly(p));
}

MotiveElem ln1_over_lp1(int n) {
    // L^(n+1)/(L + 1)
    return MotiveElem::from_ratfunc(
        RatFuncL(Poly::monomial(rat(1), n + 1), Poly::sym() + Poly::one()));
}

int spow(int s, int k) { return (k % 2 == 0) ? +1 : s; }

int parity_sign(int k) { return (k % 2 == 0) ? +1 : -1; }  // (-1)^k

struct SRow {
    MotiveElem m0, m1, me;
};

SRow s_row(int vertex, Cocycle z, int n, TableVariant variant) {
    bool corrected = variant == TableVariant::Corrected;
    if (z == Cocycle::s0) {
        if (!corrected) return {geom(n - 1), Lpow(n), Lpow(n)};
        // Enumeration-backed row: below the boundary index every coset
        // reduces to the identity; at the boundary (even n) the cosets
        // split as 2 L^(n-1) identity-class and (1/2)(L-1)L^(n-1) per
        // regular class.
        if (n % 2 == 1) return {geom(n), MotiveElem::zero(), MotiveElem::zero()};
        MotiveElem border = MotiveElem::from_ratfunc(
            RatFuncL::from_poly((Poly::sym() - Poly::one()) * Poly::monomial(rat(1, 2), n - 1)));
        return {geom(n - 1) + Lpow(n - 1) * MotiveElem::from_rat(rat(2)), border, border};
    }
    // Whether the edge-type contribution (1/2)(L+1)L^(n-1) is active.
    bool active;
    bool s1 = z == Cocycle::s1;
    if (vertex == 0)
        active = s1 ? (n % 2 == 0) : (corrected ? (n % 2 == 1) : (n % 2 == 0));
    else
        active = s1 ? (n % 2 == 1) : (corrected ? (n % 2 == 0) : (n % 2 == 1));
    if (active) return {geom(n - 1), half_edge(n), half_edge(n)};
    return {geom(n), MotiveElem::zero(), MotiveElem::zero()};
}

// The branch condition selecting M^1 over M^eps in the ramified rows.
bool t_condition(int vertex, Cocycle z, int n, int nu, int s, TableVariant variant) {
    int lhs = vertex == 0 ? spow(s, n) : spow(s, n + 1);
    switch (z) {
        case Cocycle::t0: return lhs == nu;
        case Cocycle::t1:
            if (vertex == 1 && variant == TableVariant::Printed) lhs = spow(s, n);
            return lhs == -nu;
        case Cocycle::t2:
            return lhs == parity_sign(vertex == 0 ? n : n + 1) * nu;
        case Cocycle::t3:
            return lhs == parity_sign(vertex == 0 ? n + 1 : n) * nu;
        default: throw std::logic_error("t_condition on an unramified label");
    }
}

}  // namespace

MotiveElem m_table(int vertex, const CellIndex& cell, UnipClass cls, int s, TableVariant variant) {
    cell.require_valid();
    if (vertex != 0 && vertex != 1) throw std::invalid_argument("vertex must be 0 or 1");
    if (!is_ramified(cell.z)) {
        SRow row = s_row(vertex, cell.z, cell.n, variant);
        switch (cls) {
            case UnipClass::U0: return row.m0;
            case UnipClass::U1: return row.m1;
            default: return row.me;
        }
    }
    if (cls == UnipClass::U0) return geom(cell.n);
    bool one_active = t_condition(vertex, cell.z, cell.n, cell.nu, s, variant);
    if ((cls == UnipClass::U1) == one_active) return Lpow(cell.n);
    return MotiveElem::zero();
}

MotiveElem n_table(const CellIndex& cell, int l, int alpha, int s) {
    cell.require_valid();
    if (l != 1 && l != 2) throw std::invalid_argument("n_table: l must be 1 or 2");
    if (alpha != +1 && alpha != -1) throw std::invalid_argument("n_table: alpha must be +-1");
    MotiveElem half_ln = MotiveElem::from_ratfunc(RatFuncL::from_poly(Poly::monomial(rat(1, 2), cell.n)));
    switch (cell.z) {
        case Cocycle::s0:
            throw std::domain_error("n_table has no s0 row");
        case Cocycle::s1: {
            bool odd = cell.n % 2 == 1;
            if (l == 1) return odd ? half_ln : MotiveElem::zero();
            return odd ? MotiveElem::zero() : half_ln;
        }
        case Cocycle::s2: {
            bool odd = cell.n % 2 == 1;
            if (l == 1) return odd ? MotiveElem::zero() : half_ln;
            return odd ? half_ln : MotiveElem::zero();
        }
        default: break;
    }
    int lhs = spow(s, cell.n + 1);
    bool plus_active;
    switch (cell.z) {
        case Cocycle::t0: plus_active = lhs == cell.nu; break;
        case Cocycle::t1: plus_active = lhs == -cell.nu; break;
        case Cocycle::t2:
            plus_active = lhs == parity_sign(l == 1 ? cell.n + 1 : cell.n) * cell.nu;
            break;
        default:  // t3
            plus_active = lhs == parity_sign(l == 1 ? cell.n : cell.n + 1) * cell.nu;
            break;
    }
    if ((alpha == +1) == plus_active) return ln1_over_lp1(cell.n);
    return MotiveElem::zero();
}

namespace {

MotiveElem l_minus_1_over(long den) {
    Poly p = (Poly::sym() - Poly::one()) * rat(1, den);
    return MotiveElem::from_ratfunc(RatFuncL::from_poly(p));
}

// (L^2 - 1)(1 - S) / (2^3 L)
MotiveElem ram_unit() {
    RatFuncL lsq_m1_over_8l(Poly({rat(-1), rat(0), rat(1)}), Poly::monomial(rat(8), 1));
    return MotiveElem::from_ratfunc(lsq_m1_over_8l) * (MotiveElem::one() - MotiveElem::S());
}

}  // namespace

MotiveElem c_coeff(const ReprLabel& pi, Cocycle z) {
    if (z == Cocycle::s0) throw std::domain_error("c_coeff is not defined at s0");
    Cocycle unram = pi.vertex == 0 ? Cocycle::s1 : Cocycle::s2;
    if (pi.cusp == CuspLabel::sigma_theta)
        return z == unram ? l_minus_1_over(1) : MotiveElem::zero();
    if (z == Cocycle::s1 || z == Cocycle::s2)
        return z == unram ? l_minus_1_over(2) : MotiveElem::zero();
    // Ramified columns: alternating signs, with the t2 pair flipped at
    // vertex 1 and the whole row negated for sigma_minus.
    int sign = (z == Cocycle::t0 || z == Cocycle::t2) ? +1 : -1;
    if (pi.vertex == 1 && (z == Cocycle::t2 || z == Cocycle::t3)) sign = -sign;
    if (pi.cusp == CuspLabel::sigma_minus) sign = -sign;
    return ram_unit() * MotiveElem::from_rat(rat(sign));
}

Rat c_coeff_at(const ReprLabel& pi, Cocycle z, long q) { return trfrob(c_coeff(pi, z), q); }

MotiveElem c_endo(const ReprLabel& pi, EndoLabel h) {
    bool dl = pi.cusp == CuspLabel::sigma_theta;
    switch (h) {
        case EndoLabel::SL2:
            return l_minus_1_over(dl ? 2 : 4);
        case EndoLabel::Ueps: {
            MotiveElem e = l_minus_1_over(dl ? 2 : 4);
            return pi.vertex == 0 ? e : -e;
        }
        case EndoLabel::Upi: {
            if (dl) return MotiveElem::zero();
            return pi.cusp == CuspLabel::sigma_plus ? ram_unit() : -ram_unit();
        }
        default: {  // Uepspi
            if (dl) return MotiveElem::zero();
            int sign = pi.cusp == CuspLabel::sigma_plus ? +1 : -1;
            if (pi.vertex == 1) sign = -sign;
            return ram_unit() * MotiveElem::from_rat(rat(sign));
        }
    }
}

std::vector<std::pair<int, Cocycle>> endo_combo(EndoLabel h) {
    switch (h) {
        case EndoLabel::SL2: return {{+1, Cocycle::s1}, {+1, Cocycle::s2}};
        case EndoLabel::Ueps: return {{+1, Cocycle::s1}, {-1, Cocycle::s2}};
        case EndoLabel::Upi: return {{+1, Cocycle::t0}, {-1, Cocycle::t1}};
        default: return {{+1, Cocycle::t2}, {-1, Cocycle::t3}};
    }
}

namespace {

void dump_m(std::ostringstream& os, int vertex, TableVariant variant) {
    os << "z\tn\tnu\ts\tclass\ta(L)\tb(L)\n";
    const Cocycle all[7] = {Cocycle::s0, Cocycle::s1, Cocycle::s2, Cocycle::t0,
                            Cocycle::t1, Cocycle::t2, Cocycle::t3};
    const UnipClass classes[3] = {UnipClass::U0, UnipClass::U1, UnipClass::Ueps};
    const char* cls_names[3] = {"0", "1", "eps"};
    for (Cocycle z : all) {
        int n_lo = is_ramified(z) ? 0 : 1;
        for (int n = n_lo; n < n_lo + 4; n++)
            for (int nu : {+1, -1})
                for (int s : {+1, -1})
                    for (int ci = 0; ci < 3; ci++) {
                        MotiveElem m = m_table(vertex, {z, n, nu}, classes[ci], s, variant);
                        os << name(z) << "\t" << n << "\t" << (nu > 0 ? "+" : "-") << "\t"
                           << (s > 0 ? "+" : "-") << "\t" << cls_names[ci] << "\t"
                           << m.a().str() << "\t" << m.b().str() << "\n";
                    }
    }
}

}  // namespace

std::vector<TableDump> dump_tables(TableVariant variant) {
    std::vector<TableDump> out;
    {
        std::ostringstream os;
        dump_m(os, 0, variant);
        out.push_back({"m_char_vertex0", os.str()});
    }
    {
        std::ostringstream os;
        dump_m(os, 1, variant);
        out.push_back({"m_char_vertex1", os.str()});
    }
    {
        std::ostringstream os;
        os << "z\tn\tnu\ts\tl\talpha\ta(L)\tb(L)\n";
        const Cocycle zs[6] = {Cocycle::s1, Cocycle::s2, Cocycle::t0,
                               Cocycle::t1, Cocycle::t2, Cocycle::t3};
        for (Cocycle z : zs) {
            int n_lo = is_ramified(z) ? 0 : 1;
            for (int n = n_lo; n < n_lo + 4; n++)
                for (int nu : {+1, -1})
                    for (int s : {+1, -1})
                        for (int l : {1, 2})
                            for (int alpha : {+1, -1}) {
                                MotiveElem m = n_table({z, n, nu}, l, alpha, s);
                                os << name(z) << "\t" << n << "\t" << (nu > 0 ? "+" : "-")
                                   << "\t" << (s > 0 ? "+" : "-") << "\t" << l << "\t"
                                   << (alpha > 0 ? "+" : "-") << "\t" << m.a().str() << "\t"
                                   << m.b().str() << "\n";
                            }
        }
        out.push_back({"n_orbital", os.str()});
    }
    {
        std::ostringstream os;
        os << "pi\tz\ta(L)\tb(L)\n";
        const Cocycle zs[6] = {Cocycle::s1, Cocycle::s2, Cocycle::t0,
                               Cocycle::t1, Cocycle::t2, Cocycle::t3};
        for (const ReprLabel& pi : kAllRepr)
            for (Cocycle z : zs) {
                MotiveElem m = c_coeff(pi, z);
                os << name(pi) << "\t" << name(z) << "\t" << m.a().str() << "\t" << m.b().str()
                   << "\n";
            }
        out.push_back({"c_coeff", os.str()});
    }
    {
        std::ostringstream os;
        os << "pi\tH\ta(L)\tb(L)\n";
        const EndoLabel hs[4] = {EndoLabel::SL2, EndoLabel::Ueps, EndoLabel::Upi,
                                 EndoLabel::Uepspi};
        for (const ReprLabel& pi : kAllRepr)
            for (EndoLabel h : hs) {
                MotiveElem m = c_endo(pi, h);
                os << name(pi) << "\t" << name(h) << "\t" << m.a().str() << "\t" << m.b().str()
                   << "\n";
            }
        out.push_back({"c_endo", os.str()});
    }
    {
        std::ostringstream os;
        os << "H\tcombination\n";
        const EndoLabel hs[4] = {EndoLabel::SL2, EndoLabel::Ueps, EndoLabel::Upi,
                                 EndoLabel::Uepspi};
        for (EndoLabel h : hs) {
            os << name(h) << "\t";
            bool first = true;
            for (auto& [sign, z] : endo_combo(h)) {
                if (!first) os << " ";
                os << (sign > 0 ? "+" : "-") << name(z);
                first = false;
            }
            os << "\n";
        }
        out.push_back({"endo_combo", os.str()});
    }
    return out;
}

}  // namespace sl2char
