// Acceptance suite: one check per criterion, every comparison exact, one
// PASS/FAIL line each.  Exit status 0 only when every criterion holds.

#include "sl2char/engine.hpp"
#include "sl2char/fourier.hpp"
#include "sl2char/oracle.hpp"
#include "sl2char/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace sl2char;

namespace {

const long kPrimes[] = {3, 5, 7, 11, 13};

int g_failures = 0;

void run(int index, const std::string& label, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) g_failures++;
    std::printf("[%s] criterion %2d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", index,
                label.c_str(), secs, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
}

bool criterion1(std::string&) {
    for (long q : kPrimes) {
        int p = static_cast<int>(q);
        CycloNum gp = gamma_val(+1, FqElem(p, 1)), gm = gamma_val(-1, FqElem(p, 1));
        if (gp + gm != CycloNum::from_rat(p, rat(-1))) return false;
        CycloNum d = gp - gm;
        if (d * d != CycloNum::from_rat(p, rat(sign_minus_one(q) * q))) return false;
    }
    return true;
}

bool criterion2(std::string&) {
    for (long q : kPrimes) {
        int p = static_cast<int>(q);
        if (!q_g(NilpClass::n0, p).is_zero()) return false;
        if (!(q_g(NilpClass::n1, p) + q_g(NilpClass::neps, p)).is_zero()) return false;
        if (q_g(NilpClass::n1, p) * q_g(NilpClass::n1, p) !=
            QuadGNum::from_rat(p, rat(sign_minus_one(q) * q)))
            return false;
    }
    return true;
}

bool criterion3(std::string&) {
    // springer_check runs every nonzero v internally.
    for (long q : kPrimes)
        if (!springer_check(static_cast<int>(q))) return false;
    return true;
}

bool criterion4(std::string& detail) {
    bool literal_axis_match = true;
    for (long q : kPrimes) {
        int p = static_cast<int>(q);
        int s = sign_minus_one(q);
        for (int vsgn : {+1, -1}) {
            FqElem v(p, vsgn > 0 ? 1 : smallest_nonsquare(p));
            QuadGNum unit = QuadGNum::g(p) * rat(4 * vsgn, p - 1);
            auto h0 = phi01_hat(0, p, std::nullopt, v);
            auto h1 = phi01_hat(1, p, std::nullopt, v);
            // Vanishing lines and the origin.
            for (VOrbit o : {VOrbit::V2p, VOrbit::V2m, VOrbit::V0})
                if (!h0.at(o).is_zero()) return false;
            for (VOrbit o : {VOrbit::V1p, VOrbit::V1m, VOrbit::V0})
                if (!h1.at(o).is_zero()) return false;
            // Character-sum form with the sgn(v) scaling.
            if (h0.at(VOrbit::V1p) != unit || h0.at(VOrbit::V1m) != -unit) return false;
            if (h1.at(VOrbit::V2p) != unit || h1.at(VOrbit::V2m) != -unit) return false;
        }
        // Literal axis conventions of the two displayed lines: the
        // (a,0)-line holds at every p; the (0,b)-line as printed carries
        // an extra sgn(-1), so it matches literally exactly when
        // sgn(-1) = +1.  The identity engine's b-axis weights supply that
        // factor (inverse-character normalization).
        auto h0 = phi01_hat(0, p);
        auto h1 = phi01_hat(1, p);
        if (h1.at(VOrbit::V2p) != QuadGNum::g(p) * rat(4, p - 1)) return false;
        bool b_line_literal = h0.at(VOrbit::V1p) == QuadGNum::g(p) * rat(4 * s, p - 1);
        if (b_line_literal != (s == +1)) return false;
        if (s == -1) literal_axis_match = false;
    }
    detail = literal_axis_match
                 ? "both axis conventions literal"
                 : "b-axis convention differs by sgn(-1) at q=3 mod 4, as encoded";
    return true;
}

bool criterion5(std::string&) {
    for (int q : {3, 5, 7}) {
        MotiveElem lm1 = MotiveElem::L() - MotiveElem::one();
        if (rat(hyperbola_count(q)) != trfrob(lm1, q)) return false;
        MotiveElem half_group = MotiveElem::from_ratfunc(RatFuncL::from_poly(
            Poly({rat(0), rat(-1, 2), rat(0), rat(1, 2)})));  // (1/2) L (L^2 - 1)
        if (rat(half_conic_count(q, smallest_nonsquare(q))) != trfrob(half_group, q))
            return false;
    }
    return true;
}

bool criterion6(std::string&) {
    for (int p : {3, 5}) {
        int n_cap = p == 3 ? 3 : 1;
        int s = sign_minus_one(p);
        for (const CellIndex& cell : cell_grid(n_cap)) {
            if (cell.z == Cocycle::s0) {
                for (int x = 0; x < 2; x++) {
                    PairedS0 got = oracle_s0_paired(p, x, cell);
                    Rat m0 = trfrob(m_table(x, cell, UnipClass::U0, s), p);
                    Rat m1 = trfrob(m_table(x, cell, UnipClass::U1, s), p);
                    Rat me = trfrob(m_table(x, cell, UnipClass::Ueps, s), p);
                    if (got.qt_sum != rat(1 - p) * m0 + m1 + me) return false;
                    if (got.n1_minus_neps != m1 - me) return false;
                }
                continue;
            }
            for (int x = 0; x < 2; x++)
                for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps})
                    if (oracle_M(p, x, cell, cls) != trfrob(m_table(x, cell, cls, s), p))
                        return false;
            if (trfrob(n_table(cell, 1, +1, s), p) != oracle_N_total(p, cell, VOrbit::V2p))
                return false;
            if (trfrob(n_table(cell, 1, -1, s), p) != oracle_N_total(p, cell, VOrbit::V2m))
                return false;
            if (trfrob(n_table(cell, 2, +1, s), p) != oracle_N_total(p, cell, VOrbit::V1p))
                return false;
            if (trfrob(n_table(cell, 2, -1, s), p) != oracle_N_total(p, cell, VOrbit::V1m))
                return false;
        }
    }
    return true;
}

bool criterion7(std::string& detail) {
    for (long q : kPrimes)
        for (const ReprLabel& pi : kAllRepr)
            for (const CellIndex& cell : cell_grid(6))
                if (!check_thmC(pi, cell, q).pass) return false;
    // Printed branch: failures exactly at vertex 1, t1, q = 3 mod 4.
    EngineOpts printed{TableVariant::Printed, EvalMode::Table};
    long checked = 0, failures = 0;
    for (long q : kPrimes)
        for (const ReprLabel& pi : kAllRepr)
            for (const CellIndex& cell : cell_grid(6)) {
                checked++;
                bool pass = check_thmC(pi, cell, q, printed).pass;
                bool expect_fail = q % 4 == 3 && pi.vertex == 1 &&
                                   pi.cusp != CuspLabel::sigma_theta && cell.z == Cocycle::t1;
                if (pass == expect_fail) return false;
                if (!pass) failures++;
            }
    detail = "printed branch fails on exactly " + std::to_string(failures) + " of " +
             std::to_string(checked) + " cells, all at vertex 1 / t1 / q=3 mod 4";
    return true;
}

bool criterion8(std::string&) {
    EngineOpts oracle_opts{TableVariant::Corrected, EvalMode::Oracle};
    for (int p : {3, 5}) {
        int n_cap = p == 3 ? 3 : 1;
        for (const ReprLabel& pi : kAllRepr)
            for (const CellIndex& cell : cell_grid(n_cap))
                if (!check_thmC(pi, cell, p, oracle_opts).pass) return false;
    }
    return true;
}

bool criterion9(std::string&) {
    for (long q : kPrimes) {
        for (const ReprLabel& pi : kAllRepr)
            for (const CellIndex& cell : cell_grid(6))
                if (!check_thmCendo(pi, cell, q).pass) return false;
        if (!rank_and_independence(q, 3).endo_independent) return false;
    }
    return true;
}

bool criterion10(std::string&) {
    for (long q : kPrimes) {
        if (rank_and_independence(q, 2).coeff_rank != 4) return false;
        for (const CellIndex& cell : cell_grid(4))
            for (const auto& r : check_relations(cell, q))
                if (!r.pass) return false;
    }
    for (long q : {3, 7, 11})
        for (const auto& r : check_symmetry(q, 6))
            if (!r.pass) return false;
    return true;
}

}  // namespace

int main() {
    run(1, "Gauss-sum identities, exact in Q(zeta_p), p in {3,5,7,11,13}", 1.0, criterion1);
    run(2, "Green-function structure: support, oddness, square", 1.0, criterion2);
    run(3, "split-orbit transform equals Q_T/(1-q) on the nilpotent cone, every v", 5.0,
        criterion3);
    run(4, "combined-transform identities with the sgn(v) variant", 1.0, criterion4);
    run(5, "point counts match the motive specializations", 5.0, criterion5);
    run(6, "enumeration agrees with every table entry (p=3 n<=3, p=5 n<=1)", 600.0, criterion6);
    run(7, "semisimple expansion grid; printed-branch failure set is exact", 30.0, criterion7);
    run(8, "semisimple expansion, tables bypassed by enumeration", 600.0, criterion8);
    run(9, "endoscopic expansion grid and coefficient uniqueness", 30.0, criterion9);
    run(10, "rank, packet and stable relations, conjugate-Cartan symmetry", 10.0, criterion10);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria hold\n");
    return 0;
}
