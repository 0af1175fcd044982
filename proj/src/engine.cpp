#include "sl2char/engine.hpp"

#include "sl2char/finite.hpp"
#include "sl2char/oracle.hpp"

namespace sl2char {

namespace {

int vertex_of(const ReprLabel& pi) { return pi.vertex; }

std::pair<Rat, Rat> chi_of(const ReprLabel& pi) { return chi_coeffs(pi.cusp); }

// TrFrob of the character-side motive, table or oracle backed.
Rat m_value(int vertex, const CellIndex& cell, UnipClass cls, long q, const EngineOpts& opts) {
    if (opts.mode == EvalMode::Oracle && cell.z != Cocycle::s0)
        return oracle_M(static_cast<int>(q), vertex, cell, cls);
    return trfrob(m_table(vertex, cell, cls, sign_minus_one(q), opts.variant), q);
}

// Q_T-weighted sum of character-side motives at a cell: the building block
// of both the character values and the unramified orbital values.
struct CharSums {
    Rat qt;              // (1-q) M0 + M1 + Meps
    Rat m1_minus_meps;   // M1 - Meps (multiplies g * sgn(-1))
};

CharSums char_sums(int vertex, const CellIndex& cell, long q, const EngineOpts& opts) {
    if (opts.mode == EvalMode::Oracle && cell.z == Cocycle::s0) {
        PairedS0 s = oracle_s0_paired(static_cast<int>(q), vertex, cell);
        return {s.qt_sum, s.n1_minus_neps};
    }
    Rat m0 = m_value(vertex, cell, UnipClass::U0, q, opts);
    Rat m1 = m_value(vertex, cell, UnipClass::U1, q, opts);
    Rat me = m_value(vertex, cell, UnipClass::Ueps, q, opts);
    return {rat(1 - q) * m0 + m1 + me, m1 - me};
}

}  // namespace

QuadGNum theta_val(const ReprLabel& pi, const CellIndex& cell, long q, const EngineOpts& opts) {
    cell.require_valid();
    int p = static_cast<int>(q);
    auto [a_t, a_g] = chi_of(pi);
    CharSums s = char_sums(vertex_of(pi), cell, q, opts);
    // a_T * sum Q_T(U) M^U + a_G * (Q_G(n1) M^1 + Q_G(neps) M^eps)
    // with Q_G(n1) = g * sgn(-1).
    QuadGNum qt_part = QuadGNum::from_rat(p, a_t * s.qt);
    QuadGNum qg_part = q_g(NilpClass::n1, p) * (a_g * s.m1_minus_meps);
    return qt_part + qg_part;
}

QuadGNum muhat_unram(Cocycle z, const CellIndex& cell, long q, const EngineOpts& opts) {
    cell.require_valid();
    if (z != Cocycle::s1 && z != Cocycle::s2)
        throw std::invalid_argument("muhat_unram is defined for s1 and s2 only");
    int vertex = z == Cocycle::s1 ? 0 : 1;
    CharSums s = char_sums(vertex, cell, q, opts);
    return QuadGNum::from_rat(static_cast<int>(q), s.qt / rat(1 - q));
}

QuadGNum ram_weight(Cocycle z, VOrbit orbit, int p) {
    if (!is_ramified(z)) throw std::invalid_argument("ram_weight needs a ramified label");
    if (orbit == VOrbit::V0) return QuadGNum::from_rat(p, rat(1));
    // The orbit function of z pins sgn(x) on its support and twists the
    // product xy by eps for t2/t3.  On the axis {(a,0)} the transform
    // evaluates gamma with the flavor of sgn(y) on the support; on {(0,b)}
    // with the flavor of sgn(x).
    bool twisted = z == Cocycle::t2 || z == Cocycle::t3;
    int flavor_b = (z == Cocycle::t0 || z == Cocycle::t2) ? +1 : -1;  // sgn(x) on the support
    int flavor_a = twisted ? -flavor_b : flavor_b;                    // sgn(y) on the support
    int s = sign_minus_one(p);
    Rat scale = rat(2, p - 1);
    switch (orbit) {
        case VOrbit::V2p: return gamma_one(p, flavor_a * (+1)) * scale;
        case VOrbit::V2m: return gamma_one(p, flavor_a * (-1)) * scale;
        // Inverse-character normalization on the (0,y)-axis: an extra
        // factor sgn(-1) inside the gamma flavor.
        case VOrbit::V1p: return gamma_one(p, flavor_b * s * (+1)) * scale;
        default: return gamma_one(p, flavor_b * s * (-1)) * scale;
    }
}

namespace {

// Orbital counts by orbit: table-backed (l=1 is the (x,0)-axis pair,
// l=2 the (0,y)-axis pair) or oracle-backed.
Rat n_value(const CellIndex& cell, VOrbit orbit, long q, const EngineOpts& opts) {
    int p = static_cast<int>(q);
    if (opts.mode == EvalMode::Oracle) return oracle_N_total(p, cell, orbit);
    switch (orbit) {
        case VOrbit::V0:
            throw std::logic_error("origin counts are only available from the oracle");
        case VOrbit::V2p: return trfrob(n_table(cell, 1, +1, sign_minus_one(q)), q);
        case VOrbit::V2m: return trfrob(n_table(cell, 1, -1, sign_minus_one(q)), q);
        case VOrbit::V1p: return trfrob(n_table(cell, 2, +1, sign_minus_one(q)), q);
        default: return trfrob(n_table(cell, 2, -1, sign_minus_one(q)), q);
    }
}

const VOrbit kAxisOrbits[4] = {VOrbit::V1p, VOrbit::V1m, VOrbit::V2p, VOrbit::V2m};

}  // namespace

QuadGNum muhat_ram_diff(Cocycle zi, Cocycle zj, const CellIndex& cell, long q,
                        const EngineOpts& opts) {
    cell.require_valid();
    int p = static_cast<int>(q);
    if (cell.z == Cocycle::s0) return QuadGNum::zero(p);
    QuadGNum acc = QuadGNum::zero(p);
    for (VOrbit orbit : kAxisOrbits) {
        QuadGNum w = ram_weight(zi, orbit, p) - ram_weight(zj, orbit, p);
        if (w.is_zero()) continue;
        acc = acc + w * n_value(cell, orbit, q, opts);
    }
    return acc;
}

QuadGNum muhat_ram_full(Cocycle z, const CellIndex& cell, long q, const EngineOpts& opts) {
    cell.require_valid();
    int p = static_cast<int>(q);
    if (!is_ramified(z)) throw std::invalid_argument("muhat_ram_full needs a ramified label");
    if (cell.z == Cocycle::s0)
        throw std::domain_error("full ramified values on split cells are out of oracle scope");
    require_oracle_scope(p, cell.n);
    // Origin term from enumeration (never guessed), axis terms per orbit.
    QuadGNum acc = QuadGNum::from_rat(p, oracle_N0(p, cell));
    for (VOrbit orbit : kAxisOrbits) {
        Rat count = opts.mode == EvalMode::Oracle
                        ? oracle_N_total(p, cell, orbit)
                        : n_value(cell, orbit, q, opts);
        acc = acc + ram_weight(z, orbit, p) * count;
    }
    return acc;
}

QuadGNum endo_val(EndoLabel h, const CellIndex& cell, long q, const EngineOpts& opts) {
    switch (h) {
        case EndoLabel::SL2:
            return muhat_unram(Cocycle::s1, cell, q, opts) + muhat_unram(Cocycle::s2, cell, q, opts);
        case EndoLabel::Ueps:
            return muhat_unram(Cocycle::s1, cell, q, opts) - muhat_unram(Cocycle::s2, cell, q, opts);
        case EndoLabel::Upi:
            return muhat_ram_diff(Cocycle::t0, Cocycle::t1, cell, q, opts);
        default:
            return muhat_ram_diff(Cocycle::t2, Cocycle::t3, cell, q, opts);
    }
}

CellValueReport::CellValueReport(const CellIndex& c, long q_, std::string subj, QuadGNum l,
                                 QuadGNum r, const EngineOpts& opts)
    : cell(c),
      q(q_),
      subject(std::move(subj)),
      lhs(std::move(l)),
      rhs(std::move(r)),
      residual(lhs - rhs),
      pass(residual.is_zero()),
      mode(opts.mode == EvalMode::Table ? "table" : "oracle"),
      variant(opts.variant == TableVariant::Corrected ? "corrected" : "printed") {}

CellValueReport check_thmC(const ReprLabel& pi, const CellIndex& cell, long q,
                           const EngineOpts& opts) {
    QuadGNum lhs = theta_val(pi, cell, q, opts);
    QuadGNum rhs = QuadGNum::zero(static_cast<int>(q));
    rhs = rhs + muhat_unram(Cocycle::s1, cell, q, opts) * c_coeff_at(pi, Cocycle::s1, q);
    rhs = rhs + muhat_unram(Cocycle::s2, cell, q, opts) * c_coeff_at(pi, Cocycle::s2, q);
    // c_{t1} = -c_{t0} and c_{t3} = -c_{t2}, so the ramified part reduces
    // to the two differences, whose origin terms cancel.
    rhs = rhs + muhat_ram_diff(Cocycle::t0, Cocycle::t1, cell, q, opts) *
                    c_coeff_at(pi, Cocycle::t0, q);
    rhs = rhs + muhat_ram_diff(Cocycle::t2, Cocycle::t3, cell, q, opts) *
                    c_coeff_at(pi, Cocycle::t2, q);
    return CellValueReport(cell, q, name(pi), lhs, rhs, opts);
}

CellValueReport check_thmCendo(const ReprLabel& pi, const CellIndex& cell, long q,
                               const EngineOpts& opts) {
    QuadGNum lhs = theta_val(pi, cell, q, opts);
    QuadGNum rhs = QuadGNum::zero(static_cast<int>(q));
    for (EndoLabel h : {EndoLabel::SL2, EndoLabel::Ueps, EndoLabel::Upi, EndoLabel::Uepspi})
        rhs = rhs + endo_val(h, cell, q, opts) * trfrob(c_endo(pi, h), q);
    return CellValueReport(cell, q, name(pi) + " endo", lhs, rhs, opts);
}

std::vector<CellValueReport> check_relations(const CellIndex& cell, long q,
                                             const EngineOpts& opts) {
    std::vector<CellValueReport> out;
    auto theta = [&](int vertex, CuspLabel c) {
        return theta_val({vertex, c}, cell, q, opts);
    };
    for (int v = 0; v < 2; v++) {
        QuadGNum lhs = theta(v, CuspLabel::sigma_plus) + theta(v, CuspLabel::sigma_minus);
        QuadGNum rhs = theta(v, CuspLabel::sigma_theta);
        out.emplace_back(cell, q, std::string("packet sum vertex ") + std::to_string(v), lhs,
                         rhs, opts);
    }
    QuadGNum stable = endo_val(EndoLabel::SL2, cell, q, opts) * rat(q - 1);
    out.emplace_back(cell, q, "stable sum (DL pair)",
                     theta(0, CuspLabel::sigma_theta) + theta(1, CuspLabel::sigma_theta), stable,
                     opts);
    out.emplace_back(cell, q, "stable sum (four-term)",
                     theta(0, CuspLabel::sigma_plus) + theta(0, CuspLabel::sigma_minus) +
                         theta(1, CuspLabel::sigma_plus) + theta(1, CuspLabel::sigma_minus),
                     stable, opts);
    return out;
}

std::vector<CellValueReport> check_symmetry(long q, int n_max, const EngineOpts& opts) {
    if (q % 4 != 3) throw std::invalid_argument("symmetry check applies when sgn(-1) = -1");
    std::vector<CellValueReport> out;
    for (const ReprLabel& pi : kAllRepr)
        for (int n = 0; n <= n_max; n++)
            for (int nu : {+1, -1}) {
                CellIndex a{Cocycle::t0, n, nu}, b{Cocycle::t1, n, -nu};
                out.emplace_back(a, q, name(pi) + " t0/t1 mirror", theta_val(pi, a, q, opts),
                                 theta_val(pi, b, q, opts), opts);
                CellIndex c{Cocycle::t3, n, nu}, d{Cocycle::t2, n, -nu};
                out.emplace_back(c, q, name(pi) + " t3/t2 mirror", theta_val(pi, c, q, opts),
                                 theta_val(pi, d, q, opts), opts);
            }
    return out;
}

std::vector<CellIndex> cell_grid(int n_max, int n_min_s) {
    std::vector<CellIndex> cells;
    const Cocycle all[7] = {Cocycle::s0, Cocycle::s1, Cocycle::s2, Cocycle::t0,
                            Cocycle::t1, Cocycle::t2, Cocycle::t3};
    for (Cocycle z : all) {
        int lo = is_ramified(z) ? 0 : n_min_s;
        for (int n = lo; n <= n_max; n++)
            for (int nu : {+1, -1}) cells.push_back({z, n, nu});
    }
    return cells;
}

namespace {

// Exact rank of a matrix over Q(g) by Gaussian elimination.
int quadg_rank(std::vector<std::vector<QuadGNum>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; col++) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) pr++;
        if (pr == rows) continue;
        std::swap(m[pr], m[row]);
        QuadGNum inv = m[row][col].inverse();
        for (size_t j = col; j < cols; j++) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < rows; i++) {
            if (i == row || m[i][col].is_zero()) continue;
            QuadGNum f = m[i][col];
            for (size_t j = col; j < cols; j++) m[i][j] = m[i][j] - f * m[row][j];
        }
        row++;
        rank++;
    }
    return rank;
}

}  // namespace

RankReport rank_and_independence(long q, int n_max, const EngineOpts& opts) {
    if (n_max < 2) throw std::invalid_argument("rank check needs n_max >= 2");
    int p = static_cast<int>(q);
    RankReport rep;
    // (i) rank of the 6x6 numeric coefficient matrix over Q.
    const Cocycle zs[6] = {Cocycle::s1, Cocycle::s2, Cocycle::t0, Cocycle::t1, Cocycle::t2,
                           Cocycle::t3};
    std::vector<std::vector<QuadGNum>> cm;
    for (const ReprLabel& pi : kAllRepr) {
        std::vector<QuadGNum> row;
        for (Cocycle z : zs) row.push_back(QuadGNum::from_rat(p, c_coeff_at(pi, z, q)));
        cm.push_back(std::move(row));
    }
    rep.coeff_rank = quadg_rank(std::move(cm));
    rep.coeff_rank_is_4 = rep.coeff_rank == 4;
    // (ii) independence of the four endoscopic cell-vectors over Q(g).
    std::vector<std::vector<QuadGNum>> em;
    for (EndoLabel h : {EndoLabel::SL2, EndoLabel::Ueps, EndoLabel::Upi, EndoLabel::Uepspi}) {
        std::vector<QuadGNum> row;
        for (const CellIndex& cell : cell_grid(n_max)) row.push_back(endo_val(h, cell, q, opts));
        em.push_back(std::move(row));
    }
    rep.endo_rank = quadg_rank(std::move(em));
    rep.endo_independent = rep.endo_rank == 4;
    return rep;
}

}  // namespace sl2char
