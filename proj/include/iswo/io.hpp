#pragma once

#include <string>
#include <vector>

#include "iswo/engine.hpp"
#include "iswo/evaluate.hpp"
#include "iswo/lp.hpp"
#include "iswo/model.hpp"
#include "iswo/shiftgen.hpp"

namespace iswo {

// Instance files are JSON with top-level "name", "rules" and "blocks";
// pieces are always derived on load, never serialized.
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);
std::string instance_to_json_text(const Instance& inst);
Instance instance_from_json_text(const std::string& text);

// What a solution file carries besides the schedule itself.
struct SpellRef {
    std::string block_id;
    int first_piece = 0;
    int last_piece = 0;
};

struct SolutionShift {
    std::vector<SpellRef> spells;
    Minutes cost = 0;
};

struct SolutionData {
    std::string instance;
    Params params;
    std::vector<SolutionShift> shifts;
    long long objective = 0;
    int n_shifts = 0;
    long long iterations_run = 0;
    std::uint64_t seed = 0;
};

std::string solution_to_json_text(const Instance& inst, const CandidatePool& pool,
                                  const Params& params, const SolveResult& result);
SolutionData solution_from_json_text(const std::string& text);
void save_solution(const Instance& inst, const CandidatePool& pool, const Params& params,
                   const SolveResult& result, const std::string& path);
SolutionData load_solution(const std::string& path);

// Trace CSV: iteration, p_s, removed_select, removed_mutate, objective, best_objective.
std::string trace_to_csv_text(const std::vector<IterationTrace>& trace);
void save_trace(const std::vector<IterationTrace>& trace, const std::string& path);
std::vector<IterationTrace> load_trace(const std::string& path);

// One shift per line: id, cost, spells as block:first-last triples.
std::string pool_dump_text(const Instance& inst, const CandidatePool& pool);

// One shift per line: id, x value, in_cover flag.
std::string lp_dump_text(const FractionalCover& frac);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace iswo
