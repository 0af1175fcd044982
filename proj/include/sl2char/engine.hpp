#pragma once

#include "sl2char/labels.hpp"
#include "sl2char/quadg.hpp"
#include "sl2char/tables.hpp"

#include <string>
#include <vector>

namespace sl2char {

enum class EvalMode { Table, Oracle };

struct EngineOpts {
    TableVariant variant = TableVariant::Corrected;
    EvalMode mode = EvalMode::Table;
};

// Pointwise density of the character of pi at the cell representative
// (both sides of every identity are such densities).
QuadGNum theta_val(const ReprLabel& pi, const CellIndex& cell, long q,
                   const EngineOpts& opts = {});

// Fourier transform of the unramified orbital integral (z = s1 or s2) as a
// density at the cell representative.
QuadGNum muhat_unram(Cocycle z, const CellIndex& cell, long q, const EngineOpts& opts = {});

// Restriction value of the ramified transform attached to z on one orbit
// of {xy=0}.  The (0,y)-axis values are taken with the inverse additive
// character; that normalization is the one compatible with the unipotent
// character values fixed by q_g.
QuadGNum ram_weight(Cocycle z, VOrbit orbit, int p);

// Difference mu-hat_{t_i} - mu-hat_{t_j} for the paired ramified labels
// (the origin terms cancel, so no origin count is needed).
QuadGNum muhat_ram_diff(Cocycle zi, Cocycle zj, const CellIndex& cell, long q,
                        const EngineOpts& opts = {});

// Full single-orbit ramified value, origin term included; oracle scope only.
QuadGNum muhat_ram_full(Cocycle z, const CellIndex& cell, long q, const EngineOpts& opts = {});

// kappa-orbital combination attached to an endoscopic label.
QuadGNum endo_val(EndoLabel h, const CellIndex& cell, long q, const EngineOpts& opts = {});

struct CellValueReport {
    CellIndex cell;
    long q = 0;
    std::string subject;  // representation or relation being checked
    QuadGNum lhs, rhs, residual;
    bool pass = false;
    std::string mode;     // "table" or "oracle"
    std::string variant;  // "corrected" or "printed"

    CellValueReport(const CellIndex& c, long q_, std::string subj, QuadGNum l, QuadGNum r,
                    const EngineOpts& opts);
};

// Semisimple character expansion at one cell.
CellValueReport check_thmC(const ReprLabel& pi, const CellIndex& cell, long q,
                           const EngineOpts& opts = {});

// Endoscopic expansion at one cell.
CellValueReport check_thmCendo(const ReprLabel& pi, const CellIndex& cell, long q,
                               const EngineOpts& opts = {});

// Packet sum, stable sum, and four-term sum relations at one cell.
std::vector<CellValueReport> check_relations(const CellIndex& cell, long q,
                                             const EngineOpts& opts = {});

// theta(pi, (t0,n,nu)) = theta(pi, (t1,n,-nu)) and the t2/t3 mirror, for
// q = 3 mod 4 where the paired Cartans are conjugate.
std::vector<CellValueReport> check_symmetry(long q, int n_max, const EngineOpts& opts = {});

struct RankReport {
    int coeff_rank = 0;             // rank of the 6x6 coefficient matrix
    int endo_rank = 0;              // rank of the four endoscopic cell-vectors
    bool coeff_rank_is_4 = false;
    bool endo_independent = false;
};
RankReport rank_and_independence(long q, int n_max, const EngineOpts& opts = {});

// Cells (z', n, nu) with n <= n_max in a fixed deterministic order.
std::vector<CellIndex> cell_grid(int n_max, int n_min_s = 1);

}  // namespace sl2char
