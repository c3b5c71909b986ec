#pragma once

#include <vector>

#include "iswo/shiftgen.hpp"

namespace iswo {

struct OracleLimits {
    int max_pieces = 24;
    int max_shifts = 24;
};

struct OracleResult {
    long long optimal_objective = 0;
    std::vector<int> optimal_shift_ids; // ascending
    long long nodes_explored = 0;
};

// Provably optimal covering subset by exhaustive branch and bound over a
// piece bitmask: branch on the lowest-index uncovered piece, try its
// covering shifts in ascending cost order, prune against the incumbent.
// Desk-scale ground truth only; refuses instances beyond the hard caps.
OracleResult exact_min_cover(const CandidatePool& pool, Minutes fixed_charge,
                             OracleLimits limits = {});

} // namespace iswo
