#pragma once

#include "sl2char/finite.hpp"
#include "sl2char/labels.hpp"
#include "sl2char/motive.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sl2char {

// The character-side tables are encoded with two corrections to their
// printed source, each toggled here so both variants stay comparable:
//   * vertex-1 t1 row: the branch condition uses s^(n+1), not s^n
//     (forced by the conjugate-Cartan symmetry and by enumeration);
//   * s2 rows: the parity split between the two vertices mirrors the s1
//     rows (vertex 0 active at odd n, vertex 1 at even n), matching the
//     worked case analysis and enumeration, not the printed table.
enum class TableVariant { Corrected, Printed };

// Character-side virtual motive M_{z,n,nu}^{x,class}; s = sgn(-1) at the
// target residue characteristic.
MotiveElem m_table(int vertex, const CellIndex& cell, UnipClass cls, int s,
                   TableVariant variant = TableVariant::Corrected);

// Orbital-side virtual motive N_{z,n,nu}^{l,alpha}.  The superscript l
// names the supporting half-axis pair: l = 1 for the axis {(x,0)} and
// l = 2 for {(0,y)}; alpha is the square class on that half-axis.
MotiveElem n_table(const CellIndex& cell, int l, int alpha, int s);

// Coefficients of the semisimple character expansion, as ring elements.
MotiveElem c_coeff(const ReprLabel& pi, Cocycle z);

// Numeric form of the same coefficient at a specific odd prime q.
Rat c_coeff_at(const ReprLabel& pi, Cocycle z, long q);

// Coefficients of the endoscopic expansion.
MotiveElem c_endo(const ReprLabel& pi, EndoLabel h);

// Signed combination of orbit labels attached to an endoscopic label.
std::vector<std::pair<int, Cocycle>> endo_combo(EndoLabel h);

// TSV renderings of every table (one block per table).
struct TableDump {
    std::string name;
    std::string tsv;
};
std::vector<TableDump> dump_tables(TableVariant variant = TableVariant::Corrected);

}  // namespace sl2char
