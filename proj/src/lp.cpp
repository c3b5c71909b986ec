#include "iswo/lp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace iswo {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kRhsSnapEps = 1e-11;
constexpr long long kMaxPivots = 2'000'000;

// Dense tableau: m constraint rows plus a reduced-cost row, columns are
// [x_0..x_{n-1} | surplus_0..surplus_{m-1} | artificial_0..artificial_{m-1} | rhs].
struct Tableau {
    int m = 0;
    int n = 0;
    int width = 0; // columns excluding rhs
    std::vector<std::vector<double>> row;
    std::vector<double> obj;    // reduced costs
    double obj_rhs = 0.0;       // negated objective value bookkeeping
    std::vector<int> basic;     // basic variable per row
    long long pivots = 0;

    double& at(int r, int c) { return row[r][c]; }

    void pivot(int r, int c) {
        const double piv = row[r][c];
        for (int j = 0; j <= width; ++j) row[r][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const double factor = row[i][c];
            if (factor == 0.0) continue;
            for (int j = 0; j <= width; ++j) row[i][j] -= factor * row[r][j];
        }
        const double ofac = obj[c];
        if (ofac != 0.0) {
            for (int j = 0; j < width; ++j) obj[j] -= ofac * row[r][j];
            obj_rhs -= ofac * row[r][width];
        }
        basic[r] = c;
        // Degenerate vertices leave +-1e-16 noise in basic values; snapping
        // them to exact zero keeps the Bland tie-break engaged instead of
        // chasing noise ratios forever.
        for (int i = 0; i < m; ++i) {
            if (std::abs(row[i][width]) < kRhsSnapEps) row[i][width] = 0.0;
        }
        ++pivots;
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost; leaving = min-ratio row, ties broken by the lowest basic
    // variable index. Anti-cycling, fully deterministic.
    void optimize(int num_columns) {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < num_columns; ++j) {
                if (obj[j] < -kCostEps) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return;

            int leaving = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                const double coeff = row[i][entering];
                if (coeff <= kPivotEps) continue;
                const double ratio = row[i][width] / coeff;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basic[i] < basic[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) {
                throw std::runtime_error("LP relaxation is unbounded; coverage matrix corrupt");
            }
            pivot(leaving, entering);
            if (pivots > kMaxPivots) {
                throw std::runtime_error("simplex pivot cap exceeded after " +
                                         std::to_string(pivots) + " pivots (" +
                                         std::to_string(m) + " rows, " +
                                         std::to_string(n) + " shifts)");
            }
        }
    }
};

} // namespace

FractionalCover fractional_cover(const CandidatePool& pool, Minutes fixed_charge) {
    const int n = pool.size();
    const int m = static_cast<int>(pool.coverage.size());
    for (int p = 0; p < m; ++p) {
        if (pool.coverage[p].empty()) {
            throw std::runtime_error("piece " + std::to_string(p) + " has an empty coverage list");
        }
    }

    Tableau t;
    t.m = m;
    t.n = n;
    t.width = n + 2 * m;
    t.row.assign(m, std::vector<double>(t.width + 1, 0.0));
    t.obj.assign(t.width, 0.0);
    t.basic.resize(m);

    // Row p: sum_{j covers p} x_j - surplus_p + artificial_p = 1.
    for (int p = 0; p < m; ++p) {
        for (int j : pool.coverage[p]) t.row[p][j] = 1.0;
        t.row[p][n + p] = -1.0;
        t.row[p][n + m + p] = 1.0;
        t.row[p][t.width] = 1.0;
        t.basic[p] = n + m + p;
    }

    // Phase 1: minimize the artificial sum; reduced costs come from
    // subtracting each (artificial-basic) row from the cost vector.
    for (int j = 0; j < t.width; ++j) {
        double c = (j >= n + m) ? 1.0 : 0.0;
        for (int p = 0; p < m; ++p) c -= t.row[p][j];
        t.obj[j] = c;
    }
    t.obj_rhs = 0.0;
    for (int p = 0; p < m; ++p) t.obj_rhs -= t.row[p][t.width];
    t.optimize(t.width);

    double infeas = 0.0;
    for (int p = 0; p < m; ++p) {
        if (t.basic[p] >= n + m) infeas += t.row[p][t.width];
    }
    if (infeas > 1e-7) {
        throw std::runtime_error("set covering LP infeasible; this contradicts the coverage precondition");
    }

    // Drive leftover degenerate artificials out of the basis where possible;
    // a fully zero row is redundant and stays inert. The pivot element must
    // be well away from zero or the substitution would amplify noise.
    for (int p = 0; p < m; ++p) {
        if (t.basic[p] < n + m) continue;
        int col = -1;
        for (int j = 0; j < n + m; ++j) {
            if (std::abs(t.row[p][j]) > 1e-7) {
                col = j;
                break;
            }
        }
        if (col >= 0) t.pivot(p, col);
    }

    // Phase 2: real costs on the shift columns, artificial columns blocked.
    std::vector<double> cost(t.width, 0.0);
    for (int j = 0; j < n; ++j) cost[j] = static_cast<double>(pool.shifts[j].cost + fixed_charge);
    for (int j = 0; j < t.width; ++j) {
        double c = cost[j];
        for (int p = 0; p < m; ++p) {
            if (t.basic[p] < t.width) c -= cost[t.basic[p]] * t.row[p][j];
        }
        t.obj[j] = c;
    }
    t.optimize(n + m);

    FractionalCover fc;
    fc.values.assign(n, 0.0);
    fc.in_cover.assign(n, 0);
    for (int p = 0; p < m; ++p) {
        if (t.basic[p] < n) fc.values[t.basic[p]] = t.row[p][t.width];
    }
    bool any = false;
    for (int j = 0; j < n; ++j) {
        if (fc.values[j] < 0.0 && fc.values[j] > -kPivotEps) fc.values[j] = 0.0;
        fc.objective += static_cast<double>(pool.shifts[j].cost + fixed_charge) * fc.values[j];
        if (fc.values[j] > 1e-9) {
            fc.in_cover[j] = 1;
            if (!any || fc.values[j] > fc.a) fc.a = fc.values[j];
            if (!any || fc.values[j] < fc.b) fc.b = fc.values[j];
            any = true;
        }
    }
    return fc;
}

Weights disable_fractional_criterion(const Weights& weights) {
    if (weights.w5() == 0.0) return weights;
    const double rest = weights.w1() + weights.w2() + weights.w3() + weights.w4();
    if (rest <= 0.0) {
        throw std::invalid_argument("cannot disable the fractional criterion: w1..w4 are all zero");
    }
    return Weights(weights.w1() / rest, weights.w2() / rest, weights.w3() / rest,
                   weights.w4() / rest, 0.0);
}

} // namespace iswo
