#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "iswo/model.hpp"
#include "iswo/shiftgen.hpp"

namespace iswo {

// Criterion weights for the structural coefficient. Non-negative, summing
// to 1 within 1e-12; violations are rejected at construction.
class Weights {
public:
    Weights() = default; // default distribution (0.20, 0.10, 0.10, 0.20, 0.40)
    Weights(double w1, double w2, double w3, double w4, double w5);

    double w1() const { return w1_; }
    double w2() const { return w2_; }
    double w3() const { return w3_; }
    double w4() const { return w4_; }
    double w5() const { return w5_; }

private:
    double w1_ = 0.20, w2_ = 0.10, w3_ = 0.10, w4_ = 0.20, w5_ = 0.40;
};

// LP-relaxation values per shift. A shift is in the fractional cover when
// its variable exceeds 1e-9; a and b are the max/min over those shifts.
struct FractionalCover {
    std::vector<double> values;
    std::vector<char> in_cover;
    double a = 0.0;
    double b = 0.0;
    double objective = 0.0;

    // All-zero cover for runs with the LP criterion disabled (w5 = 0).
    static FractionalCover disabled(int n_shifts);
};

// How many shifts of the current (possibly partial) schedule cover each piece.
struct CoverageContext {
    std::vector<int> cover_count;

    explicit CoverageContext(int n_pieces) : cover_count(n_pieces, 0) {}
    void add(const Shift& s) {
        for (int p : s.pieces) ++cover_count[p];
    }
    void remove(const Shift& s) {
        for (int p : s.pieces) --cover_count[p];
    }
};

// Quadratic S-curve anchored at mu(b)=0, mu((a+b)/2)=0.5, mu(a)=1.
// x is clamped into [b, a]; a == b degenerates to 1.
double membership_s_curve(double x, double a, double b);

// Spell-count preference: 2 spells best, 3 acceptable, 1 and 4 worst.
double membership_spells(int n_spells);

// Gaussian-shaped preference for high LP fractional values; mu(a)=1,
// mu(b)=0.01, and exactly 0 outside the fractional cover.
double membership_fractional(double x5, double a, double b, bool in_cover);

// f1: weighted aggregation of the five criterion memberships.
double structural_coefficient(const Shift& shift, const CriterionBounds& bounds,
                              const Weights& weights, const FractionalCover& frac);

// f2: share of the shift's work time on pieces no other shift covers.
// shift_counted says whether ctx already includes this shift's own cover.
double over_cover_penalty(const Shift& shift, std::span<const PieceOfWork> pieces,
                          const CoverageContext& ctx, bool shift_counted);

// F = f1 * f2.
double fitness(const Shift& shift, std::span<const PieceOfWork> pieces,
               const CriterionBounds& bounds, const Weights& weights,
               const FractionalCover& frac, const CoverageContext& ctx, bool shift_counted);

// Weighted-sum objective: each shift pays its cost plus a fixed charge that
// prioritizes minimizing the number of shifts.
long long schedule_objective(std::span<const int> shift_ids, const CandidatePool& pool,
                             Minutes fixed_charge);

} // namespace iswo
