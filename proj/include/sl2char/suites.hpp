#pragma once

#include "sl2char/report.hpp"

#include <vector>

namespace sl2char {

struct RunConfig {
    std::vector<long> primes = {3, 5, 7, 11, 13};
    int n_max = 6;
    std::string suite = "all";
    std::string erratum_branch = "corrected";  // corrected | printed | both
    std::string format = "json";               // json | tsv
    std::string output;                        // empty = stdout

    void validate() const;
};

// Builds the selected suite blocks; deterministic for a fixed config.
std::vector<SuiteReport> build_reports(const RunConfig& config);

}  // namespace sl2char
