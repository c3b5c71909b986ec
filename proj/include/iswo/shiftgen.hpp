#pragma once

#include <cstddef>
#include <vector>

#include "iswo/model.hpp"

namespace iswo {

// Per-criterion extremes over a candidate pool. a* are maxima, b* minima;
// they anchor the structural membership curves so each criterion spans
// [0,1] over the actual candidates.
struct CriterionBounds {
    Minutes max_work_time = 0; // a1
    Minutes min_work_time = 0; // b1
    double max_ratio = 0.0;    // a2
    double min_ratio = 0.0;    // b2
    int max_pieces = 0;        // a3
    int min_pieces = 0;        // b3
};

struct CandidatePool {
    std::vector<Shift> shifts;              // shift id == index
    std::vector<std::vector<int>> coverage; // piece_id -> covering shift ids, ascending
    CriterionBounds bounds;

    int size() const { return static_cast<int>(shifts.size()); }
};

// All contiguous piece ranges [i..j] on the block whose duration does not
// exceed max_work_time, ordered by (first_piece, last_piece).
std::vector<Spell> enumerate_spells(const Block& block, int block_index, const Rules& rules);

// The full pool of legal candidate shifts: depth-first chaining of 1..max_spells
// chronologically compatible spells, every emitted shift passing all rule
// bounds. Output order is the canonical DFS order and is deterministic.
// Throws std::runtime_error when some piece ends up with an empty coverage
// list or when the pool cap is hit.
CandidatePool enumerate_shifts(const Instance& inst, std::size_t pool_cap = 1'000'000);

} // namespace iswo
