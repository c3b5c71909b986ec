#pragma once

#include <string>
#include <vector>

#include "iswo/model.hpp"

namespace testutil {

inline iswo::Block make_block(std::string id, const std::vector<int>& times) {
    iswo::Block b;
    b.id = std::move(id);
    for (int t : times) b.relief_opportunities.push_back({t, "loc0"});
    return b;
}

inline iswo::Rules open_rules() {
    iswo::Rules r;
    r.min_work_time = 0;
    r.max_work_time = 100000;
    r.min_ratio = 0.0;
    r.max_ratio = 1.0;
    r.max_spells = 4;
    r.max_spreadover = 100000;
    r.min_break_between_spells = 30;
    r.signon_allowance = 0;
    r.signoff_allowance = 0;
    return r;
}

inline iswo::Instance make_instance(const std::vector<std::vector<int>>& block_times,
                                    const iswo::Rules& rules) {
    std::vector<iswo::Block> blocks;
    for (std::size_t i = 0; i < block_times.size(); ++i) {
        blocks.push_back(make_block("b" + std::to_string(i), block_times[i]));
    }
    return iswo::Instance::build("test", std::move(blocks), rules);
}

// Three abutting 100-minute pieces on one block, max_work_time 250 and
// max_spells 2: six candidate shifts whose ids, costs and coverage lists
// were enumerated by hand before the generator existed.
inline iswo::Instance toy_instance() {
    iswo::Rules r = open_rules();
    r.max_work_time = 250;
    r.max_spells = 2;
    r.max_spreadover = 1000;
    r.min_break_between_spells = 30;
    return make_instance({{0, 100, 200, 300}}, r);
}

} // namespace testutil
