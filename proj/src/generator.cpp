#include "iswo/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "iswo/rng.hpp"

namespace iswo {

Instance generate_instance(const GenConfig& cfg) {
    if (cfg.n_blocks < 1 || cfg.ros_min < 2 || cfg.ros_max < cfg.ros_min) {
        throw std::invalid_argument("generator: block/RO counts must be positive (ros >= 2)");
    }
    if (cfg.block_len_min < cfg.rules.min_work_time || cfg.block_len_max > cfg.rules.max_work_time) {
        throw std::invalid_argument("generator: block length range must lie inside the work-time bounds");
    }
    if (cfg.span_end - cfg.span_start < cfg.block_len_max) {
        throw std::invalid_argument("generator: day span shorter than the longest block");
    }

    Rng rng(cfg.seed);
    std::vector<Block> blocks;
    for (int b = 0; b < cfg.n_blocks; ++b) {
        const int n_ros = cfg.ros_min + static_cast<int>(rng.next_below(cfg.ros_max - cfg.ros_min + 1));
        const Minutes len =
            cfg.block_len_min + static_cast<Minutes>(rng.next_below(cfg.block_len_max - cfg.block_len_min + 1));
        const Minutes start =
            cfg.span_start + static_cast<Minutes>(rng.next_below(cfg.span_end - cfg.span_start - len + 1));

        // First and last RO pin the window; the interior ROs are distinct
        // random minutes strictly inside it.
        std::set<Minutes> times{start, start + len};
        while (static_cast<int>(times.size()) < n_ros) {
            times.insert(start + 1 + static_cast<Minutes>(rng.next_below(len - 1)));
        }
        Block block;
        block.id = "b" + std::to_string(b);
        for (Minutes t : times) {
            block.relief_opportunities.push_back({t, "loc" + std::to_string(rng.next_below(5))});
        }
        blocks.push_back(std::move(block));
    }

    std::string name = cfg.name;
    if (name.empty()) {
        name = "rand-b" + std::to_string(cfg.n_blocks) + "-s" + std::to_string(cfg.seed);
    }
    return Instance::build(std::move(name), std::move(blocks), cfg.rules);
}

GenConfig tiny_preset(std::uint64_t seed) {
    GenConfig cfg;
    cfg.name = "tiny-" + std::to_string(seed);
    cfg.n_blocks = 2;
    cfg.ros_min = 3;
    cfg.ros_max = 4;
    cfg.span_start = 360;
    cfg.span_end = 840;
    cfg.block_len_min = 150;
    cfg.block_len_max = 270;
    cfg.seed = seed;
    cfg.rules.min_work_time = 150;
    cfg.rules.max_work_time = 480;
    cfg.rules.min_ratio = 0.60;
    cfg.rules.max_ratio = 1.0;
    cfg.rules.max_spells = 2;
    cfg.rules.max_spreadover = 450;
    cfg.rules.min_break_between_spells = 60;
    cfg.rules.signon_allowance = 0;
    cfg.rules.signoff_allowance = 0;
    return cfg;
}

GenConfig medium_preset(std::uint64_t seed) {
    GenConfig cfg;
    cfg.name = "medium-" + std::to_string(seed);
    cfg.n_blocks = 20;
    cfg.ros_min = 6;
    cfg.ros_max = 10;
    cfg.span_start = 300;
    cfg.span_end = 1380;
    cfg.block_len_min = 360;
    cfg.block_len_max = 480;
    cfg.seed = seed;
    cfg.rules.min_work_time = 360;
    cfg.rules.max_work_time = 510;
    cfg.rules.min_ratio = 0.72;
    cfg.rules.max_ratio = 1.0;
    cfg.rules.max_spells = 3;
    cfg.rules.max_spreadover = 570;
    cfg.rules.min_break_between_spells = 60;
    cfg.rules.signon_allowance = 10;
    cfg.rules.signoff_allowance = 15;
    return cfg;
}

} // namespace iswo
