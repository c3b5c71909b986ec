#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "iswo/evaluate.hpp"
#include "iswo/rng.hpp"

using namespace iswo;

TEST_CASE("s-curve anchors and shape") {
    CHECK(membership_s_curve(0.0, 100.0, 0.0) == 0.0);
    CHECK(membership_s_curve(100.0, 100.0, 0.0) == 1.0);
    CHECK(membership_s_curve(50.0, 100.0, 0.0) == 0.5);
    CHECK(membership_s_curve(25.0, 100.0, 0.0) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(membership_s_curve(75.0, 100.0, 0.0) == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("s-curve clamps out-of-range inputs and handles a == b") {
    CHECK(membership_s_curve(-10.0, 100.0, 0.0) == 0.0);
    CHECK(membership_s_curve(500.0, 100.0, 0.0) == 1.0);
    CHECK(membership_s_curve(123.0, 7.0, 7.0) == 1.0);
}

TEST_CASE("s-curve is monotone and continuous at the midpoint") {
    Rng rng(99);
    for (int round = 0; round < 200; ++round) {
        const double b = rng.next_double() * 500.0;
        const double a = b + 1.0 + rng.next_double() * 500.0;
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = b + (a - b) * i / 100.0;
            const double mu = membership_s_curve(x, a, b);
            CHECK(mu >= prev);
            CHECK(mu >= 0.0);
            CHECK(mu <= 1.0);
            prev = mu;
        }
        const double mid = (a + b) / 2.0;
        const double rising = 2.0 * ((mid - b) / (a - b)) * ((mid - b) / (a - b));
        const double falling = 1.0 - 2.0 * ((mid - a) / (a - b)) * ((mid - a) / (a - b));
        CHECK(rising == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(falling == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("spell-count membership") {
    CHECK(membership_spells(2) == 1.0);
    CHECK(membership_spells(3) == 0.5);
    CHECK(membership_spells(1) == 0.0);
    CHECK(membership_spells(4) == 0.0);
    CHECK_THROWS_AS(membership_spells(0), std::invalid_argument);
    CHECK_THROWS_AS(membership_spells(5), std::invalid_argument);
}

TEST_CASE("fractional membership anchors") {
    CHECK(membership_fractional(0.8, 0.8, 0.2, true) == 1.0);
    CHECK(membership_fractional(0.2, 0.8, 0.2, true) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(membership_fractional(0.5, 0.8, 0.2, true) ==
          doctest::Approx(std::pow(0.01, 0.25)).epsilon(1e-12));
    CHECK(membership_fractional(0.9, 0.8, 0.2, false) == 0.0);
    CHECK(membership_fractional(0.4, 0.4, 0.4, true) == 1.0);
}

namespace {

// A free-standing shift plus bounds that pin each membership to 0 or 1.
struct Fixture {
    CriterionBounds bounds{480, 240, 1.0, 0.5, 8, 2};
    FractionalCover frac;
    std::vector<PieceOfWork> pieces;

    Fixture() {
        frac.values = {0.9, 0.3};
        frac.in_cover = {1, 0};
        frac.a = 0.9;
        frac.b = 0.3;
        for (int i = 0; i < 4; ++i) {
            PieceOfWork p;
            p.piece_id = i;
            p.work_time = 30;
            pieces.push_back(p);
        }
    }

    Shift top_shift() const {
        Shift s;
        s.id = 0; // x5 = a, in cover
        s.work_time = 480;
        s.ratio = 1.0;
        s.n_pieces = 8;
        s.n_spells = 2;
        s.pieces = {0, 1};
        return s;
    }

    Shift bottom_shift() const {
        Shift s;
        s.id = 1; // out of cover
        s.work_time = 240;
        s.ratio = 0.5;
        s.n_pieces = 2;
        s.n_spells = 1;
        s.pieces = {2, 3};
        return s;
    }
};

} // namespace

TEST_CASE("structural coefficient is the weighted membership sum") {
    Fixture fx;
    SUBCASE("all memberships 1 gives f1 = 1 for any weights") {
        CHECK(structural_coefficient(fx.top_shift(), fx.bounds, Weights(), fx.frac) == 1.0);
        CHECK(structural_coefficient(fx.top_shift(), fx.bounds, Weights(0.5, 0.1, 0.1, 0.2, 0.1),
                                     fx.frac) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("all memberships 0 gives f1 = 0") {
        CHECK(structural_coefficient(fx.bottom_shift(), fx.bounds, Weights(), fx.frac) == 0.0);
    }
    SUBCASE("membership pattern (1,0,0,0,0) weighs in at w1") {
        Shift s = fx.bottom_shift();
        s.work_time = 480; // only criterion 1 at its maximum
        CHECK(structural_coefficient(s, fx.bounds, Weights(), fx.frac) == doctest::Approx(0.2).epsilon(1e-15));
    }
}

TEST_CASE("weights are validated at construction") {
    CHECK_THROWS_AS(Weights(0.3, 0.3, 0.3, 0.2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Weights(-0.1, 0.4, 0.3, 0.2, 0.2), std::invalid_argument);
    CHECK_NOTHROW(Weights(0.20, 0.10, 0.10, 0.20, 0.40));
    CHECK_NOTHROW(Weights(1.0, 0.0, 0.0, 0.0, 0.0));
}

TEST_CASE("over-cover penalty per coverage pattern") {
    Fixture fx;
    Shift s = fx.top_shift(); // pieces {0,1}, 30 minutes each
    CoverageContext ctx(4);
    ctx.cover_count = {1, 1, 0, 0}; // schedule contains only this shift

    CHECK(over_cover_penalty(s, fx.pieces, ctx, true) == 1.0);

    ctx.cover_count = {2, 1, 0, 0}; // piece 0 also covered elsewhere
    CHECK(over_cover_penalty(s, fx.pieces, ctx, true) == 0.5);

    ctx.cover_count = {2, 2, 0, 0};
    CHECK(over_cover_penalty(s, fx.pieces, ctx, true) == 0.0);

    // dynamic evaluation: the shift is not part of the context yet
    ctx.cover_count = {0, 0, 0, 0};
    CHECK(over_cover_penalty(s, fx.pieces, ctx, false) == 1.0);
    ctx.cover_count = {1, 0, 0, 0};
    CHECK(over_cover_penalty(s, fx.pieces, ctx, false) == 0.5);
}

TEST_CASE("fitness is the product of both factors") {
    Fixture fx;
    Shift s = fx.top_shift();
    CoverageContext ctx(4);

    ctx.cover_count = {1, 1, 0, 0};
    CHECK(fitness(s, fx.pieces, fx.bounds, Weights(), fx.frac, ctx, true) == 1.0);

    ctx.cover_count = {2, 2, 0, 0};
    CHECK(fitness(s, fx.pieces, fx.bounds, Weights(), fx.frac, ctx, true) == 0.0);

    // f1 = 0.6 via weights, f2 = 0.5 via one overlapped piece
    ctx.cover_count = {2, 1, 0, 0};
    Shift mid = fx.top_shift();
    mid.n_spells = 1; // drops w4's share
    mid.id = 1;       // out of cover, drops w5's share
    CHECK(fitness(mid, fx.pieces, fx.bounds, Weights(0.3, 0.15, 0.15, 0.2, 0.2), fx.frac, ctx,
                  true) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("fitness never improves when overlap grows") {
    Fixture fx;
    Shift s = fx.top_shift();
    CoverageContext ctx(4);
    ctx.cover_count = {1, 1, 0, 0};
    double prev = fitness(s, fx.pieces, fx.bounds, Weights(), fx.frac, ctx, true);
    for (int overlapped = 1; overlapped <= 2; ++overlapped) {
        ++ctx.cover_count[overlapped - 1];
        const double f = fitness(s, fx.pieces, fx.bounds, Weights(), fx.frac, ctx, true);
        CHECK(f <= prev);
        prev = f;
    }
}

TEST_CASE("with w5 = 0 the fractional cover is irrelevant") {
    Fixture fx;
    FractionalCover other;
    other.values = {0.1, 0.99};
    other.in_cover = {1, 1};
    other.a = 0.99;
    other.b = 0.1;
    const Weights w(0.4, 0.2, 0.2, 0.2, 0.0);
    for (const Shift& s : {fx.top_shift(), fx.bottom_shift()}) {
        CHECK(structural_coefficient(s, fx.bounds, w, fx.frac) ==
              structural_coefficient(s, fx.bounds, w, other));
    }
}

TEST_CASE("objective charges each shift cost plus the fixed charge") {
    CandidatePool pool;
    for (Minutes c : {480, 510, 450, 0}) {
        Shift s;
        s.id = pool.size();
        s.cost = c;
        pool.shifts.push_back(s);
    }
    CHECK(schedule_objective(std::vector<int>{0, 1, 2}, pool, 2000) == 7440);
    CHECK(schedule_objective(std::vector<int>{}, pool, 2000) == 0);
    CHECK(schedule_objective(std::vector<int>{3}, pool, 2000) == 2000);
}
