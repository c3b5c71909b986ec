#include "iswo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace iswo {

namespace {

struct Search {
    const CandidatePool& pool;
    Minutes fixed_charge;
    std::uint32_t full_mask;
    std::vector<std::uint32_t> shift_mask;              // piece bitmask per shift
    std::vector<std::vector<int>> cover_by_cost;        // per piece, shifts sorted by (cost, id)
    long long best = 0;
    bool found = false;
    std::vector<int> best_ids;
    std::vector<int> chosen;
    long long nodes = 0;

    void dive(std::uint32_t covered, long long cost) {
        ++nodes;
        if (covered == full_mask) {
            if (!found || cost < best) {
                best = cost;
                best_ids = chosen;
                found = true;
            }
            return;
        }
        const int piece = std::countr_one(covered);
        for (int id : cover_by_cost[piece]) {
            const long long next_cost = cost + pool.shifts[id].cost + fixed_charge;
            if (found && next_cost >= best) break; // list is cost-ascending
            chosen.push_back(id);
            dive(covered | shift_mask[id], next_cost);
            chosen.pop_back();
        }
    }
};

} // namespace

OracleResult exact_min_cover(const CandidatePool& pool, Minutes fixed_charge,
                             OracleLimits limits) {
    const int n_pieces = static_cast<int>(pool.coverage.size());
    if (n_pieces > limits.max_pieces || pool.size() > limits.max_shifts) {
        throw std::runtime_error("too large for oracle: " + std::to_string(n_pieces) +
                                 " pieces, " + std::to_string(pool.size()) +
                                 " shifts (caps " + std::to_string(limits.max_pieces) + "/" +
                                 std::to_string(limits.max_shifts) + ")");
    }
    for (int p = 0; p < n_pieces; ++p) {
        if (pool.coverage[p].empty()) {
            throw std::runtime_error("uncoverable piece " + std::to_string(p));
        }
    }

    Search search{pool, fixed_charge,
                  n_pieces == 32 ? ~0u : ((1u << n_pieces) - 1u),
                  {}, {}, 0, false, {}, {}, 0};
    search.shift_mask.resize(pool.size(), 0);
    for (const Shift& s : pool.shifts) {
        for (int p : s.pieces) search.shift_mask[s.id] |= (1u << p);
    }
    search.cover_by_cost = pool.coverage;
    for (auto& list : search.cover_by_cost) {
        std::sort(list.begin(), list.end(), [&pool](int lhs, int rhs) {
            if (pool.shifts[lhs].cost != pool.shifts[rhs].cost) {
                return pool.shifts[lhs].cost < pool.shifts[rhs].cost;
            }
            return lhs < rhs;
        });
    }

    search.dive(0, 0);

    OracleResult result;
    result.optimal_objective = search.best;
    result.optimal_shift_ids = search.best_ids;
    std::sort(result.optimal_shift_ids.begin(), result.optimal_shift_ids.end());
    result.nodes_explored = search.nodes;
    return result;
}

} // namespace iswo
