#include "iswo/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "iswo/lp.hpp"

namespace iswo {

void Params::validate() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    if (p_m < 0.0 || p_m > 1.0) throw std::invalid_argument("p_m must lie in [0,1]");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (stagnation_limit < 1) throw std::invalid_argument("stagnation_limit must be at least 1");
    if (fixed_charge < 0) throw std::invalid_argument("fixed_charge must be non-negative");
    if (max_iterations && *max_iterations < 0) throw std::invalid_argument("max_iterations must be non-negative");
}

void Schedule::add(const Shift& s) {
    ids_.insert(std::upper_bound(ids_.begin(), ids_.end(), s.id), s.id);
    ctx_.add(s);
    objective_ += s.cost + fixed_charge_;
}

void Schedule::remove(const Shift& s) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), s.id);
    if (it == ids_.end() || *it != s.id) throw std::logic_error("removing a shift not in the schedule");
    ids_.erase(it);
    ctx_.remove(s);
    objective_ -= s.cost + fixed_charge_;
}

bool Schedule::contains(int shift_id) const {
    return std::binary_search(ids_.begin(), ids_.end(), shift_id);
}

bool Schedule::complete() const {
    for (int c : ctx_.cover_count) {
        if (c < 1) return false;
    }
    return true;
}

FitnessMap analyze(const Schedule& schedule, const Instance& inst, const CandidatePool& pool,
                   const Weights& weights, const FractionalCover& frac) {
    FitnessMap map;
    map.reserve(schedule.shift_ids().size());
    for (int id : schedule.shift_ids()) {
        const double f = fitness(pool.shifts[id], inst.pieces, pool.bounds, weights, frac,
                                 schedule.ctx(), /*shift_counted=*/true);
        map.emplace_back(id, f);
    }
    return map;
}

SelectionOutcome select(Schedule& schedule, const CandidatePool& pool,
                        const FitnessMap& fitness_map, double p, Rng& rng) {
    SelectionOutcome out;
    out.p_s = rng.next_double();
    const double threshold = out.p_s - p;
    for (const auto& [id, f] : fitness_map) {
        if (f > threshold) {
            out.retained.push_back(id);
        } else {
            out.removed.push_back(id);
        }
    }
    for (int id : out.removed) schedule.remove(pool.shifts[id]);
    return out;
}

std::vector<int> mutate(Schedule& schedule, const CandidatePool& pool, double p_m, Rng& rng) {
    const std::vector<int> snapshot = schedule.shift_ids();
    std::vector<int> removed;
    for (int id : snapshot) {
        if (rng.next_double() < p_m) {
            schedule.remove(pool.shifts[id]);
            removed.push_back(id);
        }
    }
    return removed;
}

namespace {

double fitness_of(const FitnessMap& map, int shift_id) {
    auto it = std::lower_bound(map.begin(), map.end(), shift_id,
                               [](const auto& e, int id) { return e.first < id; });
    if (it == map.end() || it->first != shift_id) {
        throw std::logic_error("fitness map is missing shift " + std::to_string(shift_id));
    }
    return it->second;
}

} // namespace

std::vector<int> prioritize(const std::vector<int>& removed, const FitnessMap& fitness_map,
                            const CandidatePool& pool, const Schedule& partial) {
    std::vector<std::pair<double, int>> order;
    order.reserve(removed.size());
    for (int id : removed) order.emplace_back(fitness_of(fitness_map, id), id);
    std::sort(order.begin(), order.end()); // ascending fitness, ties by id

    std::vector<int> sequence;
    std::vector<char> seen(partial.ctx().cover_count.size(), 0);
    for (const auto& [f, id] : order) {
        for (int piece : pool.shifts[id].pieces) {
            if (seen[piece] || partial.ctx().cover_count[piece] > 0) continue;
            seen[piece] = 1;
            sequence.push_back(piece);
        }
    }
    return sequence;
}

void construct(Schedule& partial, const std::vector<int>& sequence, const Instance& inst,
               const CandidatePool& pool, const Params& params, const Weights& weights,
               const FractionalCover& frac, Rng& rng, const std::vector<double>* f1_cache) {
    std::vector<std::pair<double, int>> scored; // (-F, id) so default sort ranks best first
    for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
        const int piece = sequence[pos];
        if (partial.ctx().cover_count[piece] > 0) continue;
        const auto& candidates = pool.coverage[piece];
        if (candidates.empty()) {
            throw std::runtime_error("piece " + std::to_string(piece) + " has an empty coverage list");
        }
        scored.clear();
        for (int id : candidates) {
            const Shift& s = pool.shifts[id];
            const double f2 = over_cover_penalty(s, inst.pieces, partial.ctx(), /*shift_counted=*/false);
            const double f1 = f1_cache ? (*f1_cache)[id]
                                       : structural_coefficient(s, pool.bounds, weights, frac);
            scored.emplace_back(-f1 * f2, id);
        }
        const int span = std::min<int>(params.k, static_cast<int>(scored.size()));
        std::partial_sort(scored.begin(), scored.begin() + span, scored.end());
        const int pick = span == 1 ? 0 : static_cast<int>(rng.next_below(span));
        partial.add(pool.shifts[scored[pick].second]);
    }
}

void remove_redundant(Schedule& schedule, const Instance& inst, const CandidatePool& pool,
                      const Weights& weights, const FractionalCover& frac) {
    for (;;) {
        int victim = -1;
        double victim_f = 0.0;
        for (int id : schedule.shift_ids()) {
            const Shift& s = pool.shifts[id];
            bool redundant = true;
            for (int piece : s.pieces) {
                if (schedule.ctx().cover_count[piece] < 2) {
                    redundant = false;
                    break;
                }
            }
            if (!redundant) continue;
            const double f = fitness(s, inst.pieces, pool.bounds, weights, frac,
                                     schedule.ctx(), /*shift_counted=*/true);
            if (victim < 0 || f < victim_f) {
                victim = id;
                victim_f = f;
            }
        }
        if (victim < 0) return;
        schedule.remove(pool.shifts[victim]);
    }
}

Schedule initial_greedy(const Instance& inst, const CandidatePool& pool, const Params& params,
                        const Weights& weights, const FractionalCover& frac, Rng& rng) {
    Schedule schedule(inst.n_pieces(), params.fixed_charge);
    std::vector<int> sequence(inst.pieces.size());
    for (int p = 0; p < inst.n_pieces(); ++p) sequence[p] = p;
    construct(schedule, sequence, inst, pool, params, weights, frac, rng);
    remove_redundant(schedule, inst, pool, weights, frac);
    return schedule;
}

namespace {

struct SolveSetup {
    Weights weights;
    FractionalCover frac;
    std::vector<double> f1_cache;
};

SolveSetup prepare(const CandidatePool& pool, const Params& params,
                   const FractionalCover* precomputed) {
    SolveSetup setup{params.weights, {}, {}};
    if (params.use_lp) {
        setup.frac = precomputed ? *precomputed : fractional_cover(pool, params.fixed_charge);
    } else {
        setup.weights = disable_fractional_criterion(params.weights);
        setup.frac = FractionalCover::disabled(pool.size());
    }
    setup.f1_cache.reserve(pool.shifts.size());
    for (const Shift& s : pool.shifts) {
        setup.f1_cache.push_back(structural_coefficient(s, pool.bounds, setup.weights, setup.frac));
    }
    return setup;
}

bool keep_iterating(const Params& params, long long stagnation, long long iterations) {
    if (stagnation >= params.stagnation_limit) return false;
    if (params.max_iterations && iterations >= *params.max_iterations) return false;
    return true;
}

} // namespace

SolveResult solve_iswo(const Instance& inst, const CandidatePool& pool, const Params& params,
                       const FractionalCover* precomputed) {
    params.validate();
    const SolveSetup setup = prepare(pool, params, precomputed);
    Rng rng(params.seed);

    Schedule current = initial_greedy(inst, pool, params, setup.weights, setup.frac, rng);
    SolveResult result{current, {}, 0};
    long long best_objective = current.objective();
    result.trace.push_back({0, 0.0, 0, 0, current.objective(), best_objective});

    long long stagnation = 0;
    long long iteration = 0;
    while (keep_iterating(params, stagnation, iteration)) {
        ++iteration;
        const FitnessMap fmap = analyze(current, inst, pool, setup.weights, setup.frac);
        const SelectionOutcome sel = select(current, pool, fmap, params.p, rng);
        const std::vector<int> mutated = mutate(current, pool, params.p_m, rng);

        std::vector<int> removed = sel.removed;
        removed.insert(removed.end(), mutated.begin(), mutated.end());
        const std::vector<int> sequence = prioritize(removed, fmap, pool, current);
        construct(current, sequence, inst, pool, params, setup.weights, setup.frac, rng,
                  &setup.f1_cache);
        if (params.redundancy_pass) {
            remove_redundant(current, inst, pool, setup.weights, setup.frac);
        }

        if (current.objective() < best_objective) {
            best_objective = current.objective();
            result.best = current;
            stagnation = 0;
        } else {
            ++stagnation;
        }
        result.trace.push_back({iteration, sel.p_s, static_cast<int>(sel.removed.size()),
                                static_cast<int>(mutated.size()), current.objective(),
                                best_objective});
    }
    result.iterations_run = iteration;
    return result;
}

SolveResult solve_swo(const Instance& inst, const CandidatePool& pool, const Params& params,
                      const FractionalCover* precomputed) {
    params.validate();
    const SolveSetup setup = prepare(pool, params, precomputed);
    Rng rng(params.seed);

    // The greedy start seeds the incumbent so baseline and ISWO runs are
    // comparable from the same point.
    Schedule incumbent = initial_greedy(inst, pool, params, setup.weights, setup.frac, rng);
    SolveResult result{incumbent, {}, 0};
    long long best_objective = incumbent.objective();
    result.trace.push_back({0, 0.0, 0, 0, incumbent.objective(), best_objective});

    // Piece priorities start at their chronological rank, earliest highest,
    // so the first rebuild walks the day front to back.
    const int n = inst.n_pieces();
    std::vector<int> chrono(n);
    for (int p = 0; p < n; ++p) chrono[p] = p;
    std::sort(chrono.begin(), chrono.end(), [&inst](int lhs, int rhs) {
        if (inst.pieces[lhs].start_min != inst.pieces[rhs].start_min) {
            return inst.pieces[lhs].start_min < inst.pieces[rhs].start_min;
        }
        return lhs < rhs;
    });
    std::vector<double> priority(n, 0.0);
    for (int rank = 0; rank < n; ++rank) priority[chrono[rank]] = static_cast<double>(n - rank);

    long long stagnation = 0;
    long long iteration = 0;
    std::vector<int> sequence(n);
    while (keep_iterating(params, stagnation, iteration)) {
        ++iteration;
        for (int p = 0; p < n; ++p) sequence[p] = p;
        std::sort(sequence.begin(), sequence.end(), [&priority](int lhs, int rhs) {
            if (priority[lhs] != priority[rhs]) return priority[lhs] > priority[rhs];
            return lhs < rhs;
        });

        Schedule rebuilt(n, params.fixed_charge);
        construct(rebuilt, sequence, inst, pool, params, setup.weights, setup.frac, rng,
                  &setup.f1_cache);

        const FitnessMap fmap = analyze(rebuilt, inst, pool, setup.weights, setup.frac);
        // Each piece rises by (1 - F) of its lowest-fitness cover.
        std::vector<double> worst_cover(n, 1.0);
        for (const auto& [id, f] : fmap) {
            for (int piece : pool.shifts[id].pieces) {
                worst_cover[piece] = std::min(worst_cover[piece], f);
            }
        }
        for (int p = 0; p < n; ++p) priority[p] += 1.0 - worst_cover[p];

        if (rebuilt.objective() < best_objective) {
            best_objective = rebuilt.objective();
            result.best = rebuilt;
            stagnation = 0;
        } else {
            ++stagnation;
        }
        result.trace.push_back({iteration, 0.0, 0, 0, rebuilt.objective(), best_objective});
    }
    result.iterations_run = iteration;
    return result;
}

SolveResult solve_greedy(const Instance& inst, const CandidatePool& pool, const Params& params,
                         const FractionalCover* precomputed) {
    params.validate();
    const SolveSetup setup = prepare(pool, params, precomputed);
    Rng rng(params.seed);
    Schedule schedule = initial_greedy(inst, pool, params, setup.weights, setup.frac, rng);
    SolveResult result{schedule, {}, 0};
    result.trace.push_back({0, 0.0, 0, 0, schedule.objective(), schedule.objective()});
    return result;
}

SolveResult solve_iswo(const Instance& inst, const Params& params) {
    return solve_iswo(inst, enumerate_shifts(inst), params);
}

SolveResult solve_swo(const Instance& inst, const Params& params) {
    return solve_swo(inst, enumerate_shifts(inst), params);
}

SolveResult solve_greedy(const Instance& inst, const Params& params) {
    return solve_greedy(inst, enumerate_shifts(inst), params);
}

} // namespace iswo
