#include "sl2char/tables.hpp"

#include "sl2char/engine.hpp"

#include <doctest.h>

using namespace sl2char;

namespace {

MotiveElem poly_motive(std::vector<Rat> coeffs) {
    return MotiveElem::from_ratfunc(RatFuncL::from_poly(Poly(std::move(coeffs))));
}

}  // namespace

TEST_CASE("character-side table entries") {
    // s1, n = 2, class 1: (1/2)(L+1)L
    CHECK(m_table(0, {Cocycle::s1, 2, +1}, UnipClass::U1, +1) ==
          poly_motive({rat(0), rat(1, 2), rat(1, 2)}));
    // t2, n = 1, nu = +, sign +1: class 1 empty, class eps gets L
    CHECK(m_table(0, {Cocycle::t2, 1, +1}, UnipClass::U1, +1).is_zero());
    CHECK(m_table(0, {Cocycle::t2, 1, +1}, UnipClass::Ueps, +1) == poly_motive({rat(0), rat(1)}));
    // and with sign -1 the branch flips
    CHECK(m_table(0, {Cocycle::t2, 1, +1}, UnipClass::U1, -1) == poly_motive({rat(0), rat(1)}));
    // identity-class entries are geometric series
    CHECK(m_table(0, {Cocycle::t0, 3, +1}, UnipClass::U0, +1) ==
          poly_motive({rat(1), rat(1), rat(1)}));
    CHECK_THROWS_AS(m_table(0, {Cocycle::s1, 0, +1}, UnipClass::U0, +1), std::domain_error);
}

TEST_CASE("split rows: enumeration-backed against their printed variant") {
    // Corrected: odd n carries only the identity class.
    CHECK(m_table(0, {Cocycle::s0, 3, +1}, UnipClass::U0, +1) ==
          poly_motive({rat(1), rat(1), rat(1)}));
    CHECK(m_table(0, {Cocycle::s0, 3, +1}, UnipClass::U1, +1).is_zero());
    // Even n: border cosets split 2L^(n-1) / (1/2)(L-1)L^(n-1) twice.
    CHECK(m_table(0, {Cocycle::s0, 2, +1}, UnipClass::U0, +1) ==
          poly_motive({rat(1), rat(2)}));
    CHECK(m_table(0, {Cocycle::s0, 2, +1}, UnipClass::U1, +1) ==
          poly_motive({rat(0), rat(-1, 2), rat(1, 2)}));
    // Printed variant kept for comparison: (L^{n-1}-1)/(L-1), L^n, L^n.
    CHECK(m_table(0, {Cocycle::s0, 3, +1}, UnipClass::U0, +1, TableVariant::Printed) ==
          poly_motive({rat(1), rat(1)}));
    CHECK(m_table(0, {Cocycle::s0, 3, +1}, UnipClass::U1, +1, TableVariant::Printed) ==
          poly_motive({rat(0), rat(0), rat(0), rat(1)}));
    // Both vertices agree on the split row.
    for (int n = 1; n <= 4; n++)
        for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps})
            CHECK(m_table(0, {Cocycle::s0, n, +1}, cls, -1) ==
                  m_table(1, {Cocycle::s0, n, +1}, cls, -1));
}

TEST_CASE("s2 rows mirror s1 across the vertices") {
    for (int n = 1; n <= 4; n++)
        for (int s : {+1, -1})
            for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps}) {
                CHECK(m_table(1, {Cocycle::s2, n, +1}, cls, s) ==
                      m_table(0, {Cocycle::s1, n, +1}, cls, s));
                CHECK(m_table(0, {Cocycle::s2, n, +1}, cls, s) ==
                      m_table(1, {Cocycle::s1, n, +1}, cls, s));
            }
}

TEST_CASE("vertex-1 t1 row condition") {
    // Corrected branch mirrors t0 under nu -> -nu; printed differs at
    // sign -1.
    for (int s : {+1, -1})
        for (int n = 0; n <= 4; n++)
            for (int nu : {+1, -1}) {
                CHECK(m_table(1, {Cocycle::t1, n, nu}, UnipClass::U1, s) ==
                      m_table(1, {Cocycle::t0, n, -nu}, UnipClass::U1, s));
            }
    CHECK(m_table(1, {Cocycle::t1, 0, +1}, UnipClass::U1, -1) !=
          m_table(1, {Cocycle::t1, 0, +1}, UnipClass::U1, -1, TableVariant::Printed));
    CHECK(m_table(1, {Cocycle::t1, 0, +1}, UnipClass::U1, +1) ==
          m_table(1, {Cocycle::t1, 0, +1}, UnipClass::U1, +1, TableVariant::Printed));
}

TEST_CASE("orbital-side table entries") {
    MotiveElem half_l2 = poly_motive({rat(0), rat(0), rat(1, 2)});
    CHECK(n_table({Cocycle::s1, 2, +1}, 2, +1, +1) == half_l2);
    CHECK(n_table({Cocycle::s1, 2, -1}, 2, -1, -1) == half_l2);
    CHECK(n_table({Cocycle::s1, 2, +1}, 1, +1, +1).is_zero());
    // t0 at n = 0: L/(L+1) on the plus orbits when sgn(-1) = +1 = nu.
    MotiveElem l_over = MotiveElem::from_ratfunc(
        RatFuncL(Poly::monomial(rat(1), 1), Poly::sym() + Poly::one()));
    CHECK(n_table({Cocycle::t0, 0, +1}, 1, +1, +1) == l_over);
    CHECK(n_table({Cocycle::t0, 0, +1}, 1, -1, +1).is_zero());
    CHECK(n_table({Cocycle::t0, 0, +1}, 2, +1, +1) == l_over);
    // and the support flips with the sign of -1
    CHECK(n_table({Cocycle::t0, 0, +1}, 1, +1, -1).is_zero());
    CHECK_THROWS_AS(n_table({Cocycle::s0, 1, +1}, 1, +1, +1), std::domain_error);
}

TEST_CASE("expansion coefficients") {
    ReprLabel pi0t{0, CuspLabel::sigma_theta}, pi0p{0, CuspLabel::sigma_plus},
        pi1m{1, CuspLabel::sigma_minus};
    CHECK(c_coeff(pi0t, Cocycle::s1) == poly_motive({rat(-1), rat(1)}));
    CHECK(c_coeff(pi1m, Cocycle::s1).is_zero());
    // pi(0,+), t0: +(L^2-1)(1-S)/(8L); its specialization at q=5 is -3/5.
    MotiveElem e = c_coeff(pi0p, Cocycle::t0);
    CHECK(e == MotiveElem::from_ratfunc(
                   RatFuncL(Poly({rat(-1), rat(0), rat(1)}), Poly::monomial(rat(8), 1))) *
                   (MotiveElem::one() - MotiveElem::S()));
    CHECK(c_coeff_at(pi0p, Cocycle::t0, 5) == rat(-3, 5));
    CHECK(c_coeff_at(pi0p, Cocycle::t0, 3) == rat(1, 3));
    CHECK_THROWS_AS(c_coeff(pi0p, Cocycle::s0), std::domain_error);
    // Numeric coherence at every supported prime.
    for (long q : {3, 5, 7, 11, 13}) {
        Rat ram = rat(q * q - 1, 8 * q) * rat(sign_minus_one(q));
        CHECK(c_coeff_at(pi0t, Cocycle::s1, q) == rat(q - 1));
        CHECK(c_coeff_at(pi0p, Cocycle::s1, q) == rat(q - 1, 2));
        CHECK(c_coeff_at(pi0p, Cocycle::t0, q) == -ram);
        CHECK(c_coeff_at(pi0p, Cocycle::t1, q) == ram);
        for (const ReprLabel& pi : kAllRepr) {
            CHECK(c_coeff_at(pi, Cocycle::t0, q) == -c_coeff_at(pi, Cocycle::t1, q));
            CHECK(c_coeff_at(pi, Cocycle::t2, q) == -c_coeff_at(pi, Cocycle::t3, q));
        }
    }
}

TEST_CASE("coefficient matrix rank") {
    for (long q : {3, 5, 7}) {
        RankReport r = rank_and_independence(q, 3);
        CHECK(r.coeff_rank == 4);
    }
}

TEST_CASE("endoscopic coefficients and combinations") {
    ReprLabel pi0t{0, CuspLabel::sigma_theta}, pi0p{0, CuspLabel::sigma_plus},
        pi1t{1, CuspLabel::sigma_theta};
    CHECK(c_endo(pi0t, EndoLabel::SL2) == poly_motive({rat(-1, 2), rat(1, 2)}));
    CHECK(c_endo(pi1t, EndoLabel::Ueps) == poly_motive({rat(1, 2), rat(-1, 2)}));
    CHECK(c_endo(pi0p, EndoLabel::Upi) ==
          MotiveElem::from_ratfunc(
              RatFuncL(Poly({rat(-1), rat(0), rat(1)}), Poly::monomial(rat(8), 1))) *
              (MotiveElem::one() - MotiveElem::S()));
    CHECK(c_endo(pi0t, EndoLabel::Upi).is_zero());
    using P = std::pair<int, Cocycle>;
    CHECK(endo_combo(EndoLabel::SL2) ==
          std::vector<P>{{+1, Cocycle::s1}, {+1, Cocycle::s2}});
    CHECK(endo_combo(EndoLabel::Upi) == std::vector<P>{{+1, Cocycle::t0}, {-1, Cocycle::t1}});
    CHECK(endo_combo(EndoLabel::Uepspi) ==
          std::vector<P>{{+1, Cocycle::t2}, {-1, Cocycle::t3}});
}

TEST_CASE("value shapes across the grid") {
    for (long q : {3, 5, 7, 11, 13}) {
        int s = sign_minus_one(q);
        for (const CellIndex& cell : cell_grid(4)) {
            for (int x = 0; x < 2; x++)
                for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps})
                    CHECK(is_integer(trfrob(m_table(x, cell, cls, s), q)));
            if (cell.z == Cocycle::s0) continue;
            for (int l : {1, 2})
                for (int alpha : {+1, -1}) {
                    Rat v = trfrob(n_table(cell, l, alpha, s), q);
                    CHECK(Int(q + 1) % v.get_den() == 0);
                }
        }
    }
}

TEST_CASE("table dumps are complete and deterministic") {
    auto dumps = dump_tables();
    CHECK(dumps.size() == 6);
    CHECK(dumps[0].name == "m_char_vertex0");
    for (const auto& d : dumps) CHECK(!d.tsv.empty());
    CHECK(dump_tables()[2].tsv == dumps[2].tsv);
}
