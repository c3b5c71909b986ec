#pragma once

#include "iswo/evaluate.hpp"
#include "iswo/shiftgen.hpp"

namespace iswo {

// Solves the LP relaxation of the set covering model
//   minimize   sum_j (cost_j + fixed_charge) x_j
//   subject to sum_{j covers p} x_j >= 1 for every piece p, 0 <= x_j <= 1
// with a dense two-phase simplex using Bland's rule, so the result is
// deterministic bit for bit. Since all objective coefficients are strictly
// positive, no optimum has x_j > 1 and the upper bounds need no tableau rows.
FractionalCover fractional_cover(const CandidatePool& pool, Minutes fixed_charge);

// Zeroes w5 and rescales w1..w4 to sum to 1 again; used when the LP signal
// is switched off. Throws when w1..w4 are all zero.
Weights disable_fractional_criterion(const Weights& weights);

} // namespace iswo
