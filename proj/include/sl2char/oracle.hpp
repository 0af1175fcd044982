#pragma once

#include "sl2char/finite.hpp"
#include "sl2char/labels.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sl2char {

// Exhaustive enumeration over SL(2, Z/p^m): ground truth for the motive
// tables.  Scope is bounded (group size grows as p^(3m)): p = 3 up to
// n = 3 and p = 5 up to n = 1.
bool oracle_in_scope(int p, int n);
void require_oracle_scope(int p, int n);

// Worker count for scan partitioning; reads SL2CHAR_THREADS once
// (results are identical for any value).
int oracle_threads();

// Progress hook for long enumerations (the CLI points it at stderr);
// never part of the report stream.
void oracle_set_progress(void (*hook)(const char*));

// |SL(2, Z/p^m)| = p^(3m-2) (p^2 - 1).
Int sl2_group_size(int p, int m);

// Closed-form double coset cardinalities.
Int coset_count_vertex(long q, int lambda);   // |G_x a_l G_x / G_x|
Int coset_count_iwahori(long q, int lambda);  // |G_x a_l G_y / G_y|

// Raw satisfier counts from one full group scan at level m = n + 2.
struct CellScan {
    int p = 0, m = 0;
    long group_size = 0;
    int lv = 0;                                        // vertex lambda window [0, lv]
    int li = 0;                                        // Iwahori window [-li, li]
    std::vector<std::array<std::array<long, 3>, 2>> v;  // [lambda][vertex][class]
    std::vector<std::array<long, 5>> iw;                // [lambda + li][orbit]
};

const CellScan& scan_cell(int p, const CellIndex& cell, std::optional<long> u = std::nullopt,
                          std::optional<long> eps = std::nullopt);

// Number of cosets y*G_x in G_x a_lambda G_x whose conjugate of
// cay(Y_cell(u)) lands in G_x and reduces into the given class.
Rat count_N_U_lambda(int p, const CellIndex& cell, int vertex, int lambda, UnipClass cls,
                     std::optional<long> u = std::nullopt, std::optional<long> eps = std::nullopt);

// Sum over the lambda window; checks the window boundary vanishes.
Rat oracle_M(int p, int vertex, const CellIndex& cell, UnipClass cls,
             std::optional<long> u = std::nullopt, std::optional<long> eps = std::nullopt);

// Iwahori-side count for one lambda and one orbit of {xy=0}.
Rat oracle_N_iwahori(int p, const CellIndex& cell, int lambda, VOrbit orbit,
                     std::optional<long> u = std::nullopt,
                     std::optional<long> eps = std::nullopt);

// Sum over all lambda: the per-orbit coefficient of the orbital side.
Rat oracle_N_total(int p, const CellIndex& cell, VOrbit orbit,
                   std::optional<long> u = std::nullopt,
                   std::optional<long> eps = std::nullopt);

// The origin-orbit coefficient (not tabulated anywhere; enumeration is the
// defining source).
Rat oracle_N0(int p, const CellIndex& cell);

// Split-Cartan cells: individual counts have unbounded support in lambda,
// but the two character pairings vanish beyond n/2.  Returns the paired
// sums, verifying the tail terms vanish identically up to lambda_star.
struct PairedS0 {
    Rat qt_sum;         // sum of (1-q) N_0 + N_1 + N_eps
    Rat n1_minus_neps;  // sum of N_1 - N_eps   (the Q_G pairing divided by g*s)
};
PairedS0 oracle_s0_paired(int p, int vertex, const CellIndex& cell,
                          std::optional<long> u = std::nullopt,
                          std::optional<long> eps = std::nullopt);

// Same quantity from the full group scan over a truncated window; used to
// cross-check the column-style enumeration above.
PairedS0 oracle_s0_paired_full(int p, int vertex, const CellIndex& cell, int lambda_max);

// Point counts backing the motive specializations.
long hyperbola_count(int q);              // #{x^2 - y^2 = 1}
long half_conic_count(int q, int eta);    // #{g in SL2(F_q) : d^2 - b^2 eta nonzero square}

}  // namespace sl2char
