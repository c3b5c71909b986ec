#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iswo/evaluate.hpp"
#include "iswo/model.hpp"
#include "iswo/rng.hpp"
#include "iswo/shiftgen.hpp"

namespace iswo {

struct Params {
    Weights weights{};
    double p = 0.3;                 // selection offset
    double p_m = 0.05;              // mutation rate
    int k = 2;                      // construction choice width
    Minutes fixed_charge = 2000;
    long long stagnation_limit = 1000;
    std::optional<long long> max_iterations;
    std::uint64_t seed = 1;
    bool use_lp = true;
    bool redundancy_pass = true;

    void validate() const; // throws std::invalid_argument
};

// A set of shifts with coverage bookkeeping and the cached objective.
// Ids are kept sorted ascending; duplicates are allowed structurally but
// never arise from construction.
class Schedule {
public:
    Schedule(int n_pieces, Minutes fixed_charge)
        : ctx_(n_pieces), fixed_charge_(fixed_charge) {}

    void add(const Shift& s);
    void remove(const Shift& s); // s must be present
    bool contains(int shift_id) const;

    const std::vector<int>& shift_ids() const { return ids_; }
    const CoverageContext& ctx() const { return ctx_; }
    long long objective() const { return objective_; }
    Minutes fixed_charge() const { return fixed_charge_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool complete() const;

private:
    std::vector<int> ids_;
    CoverageContext ctx_;
    Minutes fixed_charge_;
    long long objective_ = 0;
};

struct IterationTrace {
    long long iteration = 0;
    double p_s = 0.0;
    int removed_select = 0;
    int removed_mutate = 0;
    long long objective = 0;
    long long best_objective = 0;
};

struct SolveResult {
    Schedule best;
    std::vector<IterationTrace> trace;
    long long iterations_run = 0;
};

// (shift id, F) pairs in ascending id order.
using FitnessMap = std::vector<std::pair<int, double>>;

FitnessMap analyze(const Schedule& schedule, const Instance& inst, const CandidatePool& pool,
                   const Weights& weights, const FractionalCover& frac);

struct SelectionOutcome {
    std::vector<int> retained;
    std::vector<int> removed;
    double p_s = 0.0;
};

// Draws one p_s ~ U[0,1) for the iteration; a shift stays iff F > p_s - p
// (strict). Removed shifts leave the schedule and release their pieces.
SelectionOutcome select(Schedule& schedule, const CandidatePool& pool,
                        const FitnessMap& fitness_map, double p, Rng& rng);

// Each surviving shift is independently discarded with probability p_m,
// in ascending id order.
std::vector<int> mutate(Schedule& schedule, const CandidatePool& pool, double p_m, Rng& rng);

// Removed shifts sorted ascending by fitness (ties by id), expanded into
// their pieces in order with duplicates and retained-covered pieces dropped.
// The output is exactly the set of currently uncovered pieces.
std::vector<int> prioritize(const std::vector<int>& removed, const FitnessMap& fitness_map,
                            const CandidatePool& pool, const Schedule& partial);

// Greedy randomized repair: for the first uncovered piece in the sequence,
// evaluate every covering shift against the current partial coverage and
// pick uniformly among the k best. f1_cache, when given, holds the
// precomputed structural coefficient per shift.
void construct(Schedule& partial, const std::vector<int>& sequence, const Instance& inst,
               const CandidatePool& pool, const Params& params, const Weights& weights,
               const FractionalCover& frac, Rng& rng,
               const std::vector<double>* f1_cache = nullptr);

// Repeatedly drops the lowest-fitness shift whose pieces are all covered
// elsewhere. Completeness is preserved and the objective never increases.
void remove_redundant(Schedule& schedule, const Instance& inst, const CandidatePool& pool,
                      const Weights& weights, const FractionalCover& frac);

// Construction over all pieces in chronological (piece id) order followed
// by a redundancy pass; the starting solution for both solvers.
Schedule initial_greedy(const Instance& inst, const CandidatePool& pool, const Params& params,
                        const Weights& weights, const FractionalCover& frac, Rng& rng);

// The Analysis-Selection-Mutation-Prioritization-Construction loop. The
// best schedule seen is retained and returned. precomputed, when non-null,
// supplies the fractional cover so batch drivers can solve it once per pool.
SolveResult solve_iswo(const Instance& inst, const CandidatePool& pool, const Params& params,
                       const FractionalCover* precomputed = nullptr);

// Classic baseline: rebuild from scratch each iteration, ordering pieces by
// a priority that grows by (1 - F) of the piece's worst cover.
SolveResult solve_swo(const Instance& inst, const CandidatePool& pool, const Params& params,
                      const FractionalCover* precomputed = nullptr);

// One greedy construction, no iteration.
SolveResult solve_greedy(const Instance& inst, const CandidatePool& pool, const Params& params,
                         const FractionalCover* precomputed = nullptr);

// Pool- and LP-building convenience wrappers.
SolveResult solve_iswo(const Instance& inst, const Params& params);
SolveResult solve_swo(const Instance& inst, const Params& params);
SolveResult solve_greedy(const Instance& inst, const Params& params);

} // namespace iswo
