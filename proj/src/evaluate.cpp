#include "iswo/evaluate.hpp"

#include <cmath>
#include <stdexcept>

namespace iswo {

Weights::Weights(double w1, double w2, double w3, double w4, double w5)
    : w1_(w1), w2_(w2), w3_(w3), w4_(w4), w5_(w5) {
    for (double w : {w1, w2, w3, w4, w5}) {
        if (!(w >= 0.0)) throw std::invalid_argument("criterion weight must be non-negative");
    }
    const double sum = w1 + w2 + w3 + w4 + w5;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("criterion weights must sum to 1");
    }
}

FractionalCover FractionalCover::disabled(int n_shifts) {
    FractionalCover fc;
    fc.values.assign(n_shifts, 0.0);
    fc.in_cover.assign(n_shifts, 0);
    return fc;
}

double membership_s_curve(double x, double a, double b) {
    if (a == b) return 1.0; // all candidates identical on this criterion
    if (x < b) x = b;
    if (x > a) x = a;
    const double mid = (a + b) / 2.0;
    if (x < mid) {
        const double t = (x - b) / (a - b);
        return 2.0 * t * t;
    }
    const double t = (x - a) / (a - b);
    return 1.0 - 2.0 * t * t;
}

double membership_spells(int n_spells) {
    switch (n_spells) {
        case 1: return 0.0;
        case 2: return 1.0;
        case 3: return 0.5;
        case 4: return 0.0;
        default: throw std::invalid_argument("spell count outside 1..4");
    }
}

double membership_fractional(double x5, double a, double b, bool in_cover) {
    if (!in_cover) return 0.0;
    if (a == b) return 1.0;
    static const double ln001 = std::log(0.01);
    const double d = x5 - a;
    return std::exp(ln001 / ((a - b) * (a - b)) * d * d);
}

double structural_coefficient(const Shift& shift, const CriterionBounds& bounds,
                              const Weights& weights, const FractionalCover& frac) {
    const double mu1 = membership_s_curve(static_cast<double>(shift.work_time),
                                          static_cast<double>(bounds.max_work_time),
                                          static_cast<double>(bounds.min_work_time));
    const double mu2 = membership_s_curve(shift.ratio, bounds.max_ratio, bounds.min_ratio);
    const double mu3 = membership_s_curve(static_cast<double>(shift.n_pieces),
                                          static_cast<double>(bounds.max_pieces),
                                          static_cast<double>(bounds.min_pieces));
    const double mu4 = membership_spells(shift.n_spells);
    const double mu5 = membership_fractional(frac.values[shift.id], frac.a, frac.b,
                                             frac.in_cover[shift.id] != 0);
    return weights.w1() * mu1 + weights.w2() * mu2 + weights.w3() * mu3 +
           weights.w4() * mu4 + weights.w5() * mu5;
}

double over_cover_penalty(const Shift& shift, std::span<const PieceOfWork> pieces,
                          const CoverageContext& ctx, bool shift_counted) {
    // beta_k is the piece's work time; alpha_k is 1 iff no other shift
    // covers piece k. An uncovered piece counts as alpha = 1.
    const int self = shift_counted ? 1 : 0;
    long long sole = 0;
    long long total = 0;
    for (int piece : shift.pieces) {
        const Minutes beta = pieces[piece].work_time;
        total += beta;
        if (ctx.cover_count[piece] - self <= 0) sole += beta;
    }
    return static_cast<double>(sole) / static_cast<double>(total);
}

double fitness(const Shift& shift, std::span<const PieceOfWork> pieces,
               const CriterionBounds& bounds, const Weights& weights,
               const FractionalCover& frac, const CoverageContext& ctx, bool shift_counted) {
    const double f2 = over_cover_penalty(shift, pieces, ctx, shift_counted);
    if (f2 == 0.0) return 0.0;
    return structural_coefficient(shift, bounds, weights, frac) * f2;
}

long long schedule_objective(std::span<const int> shift_ids, const CandidatePool& pool,
                             Minutes fixed_charge) {
    long long total = 0;
    for (int id : shift_ids) {
        total += pool.shifts[id].cost + fixed_charge;
    }
    return total;
}

} // namespace iswo
