#pragma once

#include "sl2char/engine.hpp"

#include <string>
#include <vector>

namespace sl2char {

struct SuiteReport {
    std::string suite;
    long q = 0;
    std::vector<CellValueReport> cells;
    // free-form check lines for suites that are not cell-shaped
    std::vector<std::pair<std::string, bool>> checks;

    bool all_pass() const;
};

// Stable JSON rendering: {suite, q, cells: [{cell:{z,n,nu}, pi, lhs, rhs,
// residual, pass, mode}]}, numbers as "num/den" strings and Q(g) values as
// {a, b, gsq} objects.  Byte-identical across runs.
std::string to_json(const std::vector<SuiteReport>& reports);
std::string to_tsv(const std::vector<SuiteReport>& reports);

// The documented schema of the JSON report.
std::string report_schema();

}  // namespace sl2char
