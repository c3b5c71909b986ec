#pragma once

#include <cstdint>
#include <string>

#include "iswo/model.hpp"

namespace iswo {

// Random-instance generator. Every block is a window of random length
// placed inside the day span, with its interior ROs at sorted distinct
// random minutes. Window lengths are kept inside [min_work_time,
// max_work_time] so the whole-block spell is always a legal shift and every
// piece is coverable by construction.
struct GenConfig {
    std::string name;
    int n_blocks = 2;
    int ros_min = 3;
    int ros_max = 4;
    Minutes span_start = 360;  // day span the blocks live in
    Minutes span_end = 1380;
    Minutes block_len_min = 240;
    Minutes block_len_max = 480;
    std::uint64_t seed = 1;
    Rules rules;
};

Instance generate_instance(const GenConfig& cfg);

// Desk-scale preset solvable by the exact oracle: at most 12 pieces and a
// candidate pool small enough for exhaustive search.
GenConfig tiny_preset(std::uint64_t seed);

// 20-block benchmark preset for the solver comparison suite.
GenConfig medium_preset(std::uint64_t seed);

} // namespace iswo
