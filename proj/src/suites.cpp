#include "sl2char/suites.hpp"

#include "sl2char/fourier.hpp"
#include "sl2char/oracle.hpp"

#include <algorithm>
#include <set>

namespace sl2char {

namespace {

const std::set<std::string> kSuites = {"gauss",  "green",   "fourier",   "tables", "oracle",
                                       "formula", "endoscopy", "relations", "all"};

bool want(const RunConfig& c, const std::string& s) { return c.suite == "all" || c.suite == s; }

SuiteReport gauss_suite(long q) {
    int p = static_cast<int>(q);
    SuiteReport rep{"gauss", q, {}, {}};
    CycloNum gp = gamma_val(+1, FqElem(p, 1));
    CycloNum gm = gamma_val(-1, FqElem(p, 1));
    rep.checks.emplace_back("gamma+ + gamma- = -1", gp + gm == CycloNum::from_rat(p, rat(-1)));
    CycloNum diff = gp - gm;
    rep.checks.emplace_back("(gamma+ - gamma-)^2 = sgn(-1) q",
                            diff * diff ==
                                CycloNum::from_rat(p, rat(sign_minus_one(q) * q)));
    rep.checks.emplace_back("gamma+ - gamma- equals the character sum", diff == gauss_sum(p));
    QuadGNum gq = as_quadg(gauss_sum(p));
    rep.checks.emplace_back("character sum is g in Q(g)", gq == QuadGNum::g(p));
    rep.checks.emplace_back("gamma+(0) counts the squares",
                            gamma_val(+1, FqElem(p, 0)) ==
                                CycloNum::from_rat(p, rat((q - 1) / 2)));
    return rep;
}

SuiteReport green_suite(long q) {
    int p = static_cast<int>(q);
    SuiteReport rep{"green", q, {}, {}};
    rep.checks.emplace_back("Q_G vanishes at the zero nilpotent", q_g(NilpClass::n0, p).is_zero());
    rep.checks.emplace_back("Q_G(n1) + Q_G(neps) = 0",
                            (q_g(NilpClass::n1, p) + q_g(NilpClass::neps, p)).is_zero());
    QuadGNum sq = q_g(NilpClass::n1, p) * q_g(NilpClass::n1, p);
    rep.checks.emplace_back("Q_G(n1)^2 = sgn(-1) q",
                            sq == QuadGNum::from_rat(p, rat(sign_minus_one(q) * q)));
    rep.checks.emplace_back("Q_T = (1-q, 1, 1)",
                            q_t(NilpClass::n0, q) == rat(1 - q) && q_t(NilpClass::n1, q) == 1 &&
                                q_t(NilpClass::neps, q) == 1);
    return rep;
}

SuiteReport fourier_suite(long q) {
    int p = static_cast<int>(q);
    SuiteReport rep{"fourier", q, {}, {}};
    rep.checks.emplace_back("split-orbit transform matches Q_T/(1-q) on the cone",
                            springer_check(p));
    if (p > 3) {
        int eps2 = 0;
        for (int e = smallest_nonsquare(p) + 1; e < p; e++)
            if (sgn_mod(p, e) == -1) {
                eps2 = e;
                break;
            }
        rep.checks.emplace_back("same with a second non-residue", springer_check(p, eps2));
    }
    for (int which : {0, 1}) {
        bool ok = true;
        try {
            phi01_hat(which, p);  // self-checking
        } catch (const std::exception&) {
            ok = false;
        }
        rep.checks.emplace_back(
            std::string("combined transform ") + std::to_string(which) + " support and value",
            ok);
    }
    // Opposite v swaps the signed orbits.
    {
        FqElem vplus(p, 1), vminus(p, smallest_nonsquare(p));
        auto hp = phi01_hat(0, p, std::nullopt, vplus);
        auto hm = phi01_hat(0, p, std::nullopt, vminus);
        bool swapped = hp.at(VOrbit::V1p) == hm.at(VOrbit::V1m) &&
                       hp.at(VOrbit::V1m) == hm.at(VOrbit::V1p);
        rep.checks.emplace_back("sign of v swaps the signed orbits", swapped);
    }
    return rep;
}

SuiteReport tables_suite(long q, int n_max, TableVariant variant) {
    int s = sign_minus_one(q);
    SuiteReport rep{"tables", q, {}, {}};
    // Numeric coefficient table: the unramified entries are q-1 or (q-1)/2;
    // the ramified ones are +-(q^2-1)/(8q) * sgn(-1).
    bool coeff_ok = true;
    Rat ram = rat(q * q - 1, 8 * q) * rat(s);
    for (const ReprLabel& pi : kAllRepr) {
        Cocycle own = pi.vertex == 0 ? Cocycle::s1 : Cocycle::s2;
        Cocycle other = pi.vertex == 0 ? Cocycle::s2 : Cocycle::s1;
        bool dl = pi.cusp == CuspLabel::sigma_theta;
        coeff_ok &= c_coeff_at(pi, own, q) == (dl ? rat(q - 1) : rat(q - 1, 2));
        coeff_ok &= c_coeff_at(pi, other, q) == 0;
        for (Cocycle z : {Cocycle::t0, Cocycle::t1, Cocycle::t2, Cocycle::t3}) {
            Rat v = c_coeff_at(pi, z, q);
            coeff_ok &= dl ? v == 0 : (v == ram || v == -ram);
        }
        coeff_ok &= c_coeff_at(pi, Cocycle::t0, q) == -c_coeff_at(pi, Cocycle::t1, q);
        coeff_ok &= c_coeff_at(pi, Cocycle::t2, q) == -c_coeff_at(pi, Cocycle::t3, q);
    }
    rep.checks.emplace_back("coefficient table coherence and pairing", coeff_ok);
    RankReport rank = rank_and_independence(q, std::max(2, std::min(n_max, 3)));
    rep.checks.emplace_back("coefficient matrix has rank 4", rank.coeff_rank_is_4);
    // Value shapes over the grid.
    bool m_int = true, n_den = true;
    for (const CellIndex& cell : cell_grid(n_max))
        for (int x = 0; x < 2; x++)
            for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps}) {
                Rat v = trfrob(m_table(x, cell, cls, s, variant), q);
                m_int &= is_integer(v);
            }
    for (const CellIndex& cell : cell_grid(n_max)) {
        if (cell.z == Cocycle::s0) continue;
        for (int l : {1, 2})
            for (int alpha : {+1, -1}) {
                Rat v = trfrob(n_table(cell, l, alpha, s), q);
                n_den &= Int(q + 1) % v.get_den() == 0;
            }
    }
    rep.checks.emplace_back("character-side entries specialize to integers", m_int);
    rep.checks.emplace_back("orbital-side denominators divide q+1", n_den);
    return rep;
}

SuiteReport formula_suite(long q, int n_max, TableVariant variant) {
    EngineOpts opts{variant, EvalMode::Table};
    SuiteReport rep{"formula", q, {}, {}};
    for (const ReprLabel& pi : kAllRepr)
        for (const CellIndex& cell : cell_grid(n_max))
            rep.cells.push_back(check_thmC(pi, cell, q, opts));
    return rep;
}

SuiteReport endoscopy_suite(long q, int n_max, TableVariant variant) {
    EngineOpts opts{variant, EvalMode::Table};
    SuiteReport rep{"endoscopy", q, {}, {}};
    for (const ReprLabel& pi : kAllRepr)
        for (const CellIndex& cell : cell_grid(n_max))
            rep.cells.push_back(check_thmCendo(pi, cell, q, opts));
    RankReport rank = rank_and_independence(q, std::max(2, std::min(n_max, 3)), opts);
    rep.checks.emplace_back("endoscopic cell-vectors independent (coefficients unique)",
                            rank.endo_independent);
    return rep;
}

SuiteReport relations_suite(long q, int n_max, TableVariant variant) {
    EngineOpts opts{variant, EvalMode::Table};
    SuiteReport rep{"relations", q, {}, {}};
    for (const CellIndex& cell : cell_grid(n_max)) {
        auto rel = check_relations(cell, q, opts);
        rep.cells.insert(rep.cells.end(), rel.begin(), rel.end());
    }
    if (q % 4 == 3) {
        auto sym = check_symmetry(q, std::min(n_max, 6), opts);
        rep.cells.insert(rep.cells.end(), sym.begin(), sym.end());
    }
    return rep;
}

SuiteReport oracle_suite(long q, TableVariant variant) {
    int p = static_cast<int>(q);
    SuiteReport rep{"oracle", q, {}, {}};
    if (p != 3 && p != 5) {
        rep.checks.emplace_back("skipped: outside enumeration scope", true);
        return rep;
    }
    int n_cap = p == 3 ? 3 : 1;
    int s = sign_minus_one(q);
    // Table agreement, cell by cell.
    for (const CellIndex& cell : cell_grid(n_cap)) {
        if (cell.z == Cocycle::s0) {
            for (int x = 0; x < 2; x++) {
                PairedS0 got = oracle_s0_paired(p, x, cell);
                Rat want_qt = rat(0), want_gdiff = rat(0);
                Rat m0 = trfrob(m_table(x, cell, UnipClass::U0, s, variant), q);
                Rat m1 = trfrob(m_table(x, cell, UnipClass::U1, s, variant), q);
                Rat me = trfrob(m_table(x, cell, UnipClass::Ueps, s, variant), q);
                want_qt = rat(1 - q) * m0 + m1 + me;
                want_gdiff = m1 - me;
                rep.checks.emplace_back("split cell " + cell.str() + " vertex " +
                                            std::to_string(x) + " paired sums",
                                        got.qt_sum == want_qt &&
                                            got.n1_minus_neps == want_gdiff);
            }
            continue;
        }
        bool ok_m = true;
        for (int x = 0; x < 2; x++)
            for (UnipClass cls : {UnipClass::U0, UnipClass::U1, UnipClass::Ueps})
                ok_m &= oracle_M(p, x, cell, cls) ==
                        trfrob(m_table(x, cell, cls, s, variant), q);
        rep.checks.emplace_back("character counts " + cell.str(), ok_m);
        bool ok_n = trfrob(n_table(cell, 1, +1, s), q) == oracle_N_total(p, cell, VOrbit::V2p) &&
                    trfrob(n_table(cell, 1, -1, s), q) == oracle_N_total(p, cell, VOrbit::V2m) &&
                    trfrob(n_table(cell, 2, +1, s), q) == oracle_N_total(p, cell, VOrbit::V1p) &&
                    trfrob(n_table(cell, 2, -1, s), q) == oracle_N_total(p, cell, VOrbit::V1m);
        rep.checks.emplace_back("orbital counts " + cell.str(), ok_n);
    }
    // Point counts behind the motive specializations.
    if (p == 3 || q <= 7) {
        rep.checks.emplace_back("hyperbola count is q-1", hyperbola_count(p) == q - 1);
        rep.checks.emplace_back(
            "half-group conic count is q(q^2-1)/2",
            half_conic_count(p, smallest_nonsquare(p)) == q * (q * q - 1) / 2);
    }
    // End-to-end identity with every table value replaced by enumeration.
    EngineOpts oracle_opts{variant, EvalMode::Oracle};
    for (const ReprLabel& pi : kAllRepr)
        for (const CellIndex& cell : cell_grid(n_cap))
            rep.cells.push_back(check_thmC(pi, cell, q, oracle_opts));
    return rep;
}

}  // namespace

void RunConfig::validate() const {
    const std::set<long> allowed = {3, 5, 7, 11, 13};
    if (primes.empty()) throw std::invalid_argument("no primes selected");
    for (long p : primes)
        if (!allowed.count(p))
            throw std::invalid_argument("prime " + std::to_string(p) + " not supported");
    if (n_max < 1 || n_max > 6) throw std::invalid_argument("n_max must be in [1, 6]");
    if (!kSuites.count(suite)) throw std::invalid_argument("unknown suite: " + suite);
    if (erratum_branch != "corrected" && erratum_branch != "printed" && erratum_branch != "both")
        throw std::invalid_argument("erratum branch must be corrected, printed or both");
    if (format != "json" && format != "tsv") throw std::invalid_argument("unknown format");
}

std::vector<SuiteReport> build_reports(const RunConfig& config) {
    config.validate();
    std::vector<TableVariant> variants;
    if (config.erratum_branch == "corrected" || config.erratum_branch == "both")
        variants.push_back(TableVariant::Corrected);
    if (config.erratum_branch == "printed" || config.erratum_branch == "both")
        variants.push_back(TableVariant::Printed);

    std::vector<SuiteReport> out;
    for (long q : config.primes) {
        if (want(config, "gauss")) out.push_back(gauss_suite(q));
        if (want(config, "green")) out.push_back(green_suite(q));
        if (want(config, "fourier")) out.push_back(fourier_suite(q));
        for (TableVariant variant : variants) {
            auto tag = [&](SuiteReport r) {
                if (variant == TableVariant::Printed) r.suite += "-printed";
                out.push_back(std::move(r));
            };
            if (want(config, "tables")) tag(tables_suite(q, config.n_max, variant));
            if (want(config, "formula")) tag(formula_suite(q, config.n_max, variant));
            if (want(config, "endoscopy")) tag(endoscopy_suite(q, config.n_max, variant));
            if (want(config, "relations")) tag(relations_suite(q, config.n_max, variant));
            if (want(config, "oracle")) tag(oracle_suite(q, variant));
        }
    }
    return out;
}

}  // namespace sl2char
