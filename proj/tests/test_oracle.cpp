#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "iswo/evaluate.hpp"
#include "iswo/oracle.hpp"
#include "iswo/shiftgen.hpp"

using namespace iswo;

namespace {

CandidatePool make_pool(const std::vector<std::pair<std::vector<int>, Minutes>>& shifts,
                        int n_pieces) {
    CandidatePool pool;
    pool.coverage.assign(n_pieces, {});
    for (const auto& [pieces, cost] : shifts) {
        Shift s;
        s.id = pool.size();
        s.pieces = pieces;
        s.cost = cost;
        for (int p : pieces) pool.coverage[p].push_back(s.id);
        pool.shifts.push_back(std::move(s));
    }
    return pool;
}

} // namespace

TEST_CASE("a single all-covering shift beats costlier partial bundles") {
    CandidatePool pool = make_pool({{{0, 1, 2}, 300}, {{0, 1}, 280}, {{2}, 280}}, 3);
    OracleResult r = exact_min_cover(pool, 2000);
    CHECK(r.optimal_objective == 2300);
    CHECK(r.optimal_shift_ids == std::vector<int>{0});
    CHECK(r.nodes_explored > 0);
}

TEST_CASE("two disjoint partitioning shifts win") {
    CandidatePool pool =
        make_pool({{{0, 1}, 100}, {{2, 3}, 120}, {{0, 1, 2, 3}, 3000}, {{1, 2}, 100}}, 4);
    // singletons for pieces 0 and 3 so partial covers exist but cost more
    pool.shifts.push_back({4, {}, {0}, 0, 0, 90, 0.0, 1, 1});
    pool.coverage[0].push_back(4);
    pool.shifts.push_back({5, {}, {3}, 0, 0, 90, 0.0, 1, 1});
    pool.coverage[3].push_back(5);
    OracleResult r = exact_min_cover(pool, 2000);
    CHECK(r.optimal_objective == 2100 + 2120);
    CHECK(r.optimal_shift_ids == std::vector<int>{0, 1});
}

// Objective 4300 for the toy pool, found by hand: {(0,0)}+{(1,2)} and
// {(0,1)}+{(2,2)} both cost 300 work + 2x2000.
TEST_CASE("toy instance optimum matches the hand computation") {
    Instance inst = testutil::toy_instance();
    CandidatePool pool = enumerate_shifts(inst);
    OracleResult r = exact_min_cover(pool, 2000);
    CHECK(r.optimal_objective == 4300);
    CHECK(schedule_objective(r.optimal_shift_ids, pool, 2000) == 4300);
    CoverageContext ctx(inst.n_pieces());
    for (int id : r.optimal_shift_ids) ctx.add(pool.shifts[id]);
    for (int c : ctx.cover_count) CHECK(c >= 1);
}

TEST_CASE("hard caps are refused loudly") {
    std::vector<std::pair<std::vector<int>, Minutes>> many;
    for (int i = 0; i < 25; ++i) many.push_back({{0}, 100});
    CHECK_THROWS_WITH_AS(exact_min_cover(make_pool(many, 1), 2000),
                         doctest::Contains("too large for oracle"), std::runtime_error);

    CandidatePool wide = make_pool({{{0}, 10}}, 25);
    for (int p = 1; p < 25; ++p) wide.coverage[p].push_back(0);
    CHECK_THROWS_WITH_AS(exact_min_cover(wide, 2000),
                         doctest::Contains("too large for oracle"), std::runtime_error);
}

TEST_CASE("an uncoverable piece is an error") {
    CandidatePool pool = make_pool({{{0}, 100}}, 2);
    CHECK_THROWS_WITH_AS(exact_min_cover(pool, 2000), doctest::Contains("uncoverable"),
                         std::runtime_error);
}

TEST_CASE("the oracle is deterministic") {
    Instance inst = testutil::toy_instance();
    CandidatePool pool = enumerate_shifts(inst);
    OracleResult a = exact_min_cover(pool, 2000);
    OracleResult b = exact_min_cover(pool, 2000);
    CHECK(a.optimal_objective == b.optimal_objective);
    CHECK(a.optimal_shift_ids == b.optimal_shift_ids);
    CHECK(a.nodes_explored == b.nodes_explored);
}
