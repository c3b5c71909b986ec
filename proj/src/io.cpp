#include "iswo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iswo {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

namespace {

json rules_to_json(const Rules& r) {
    return json{{"min_work_time", r.min_work_time},
                {"max_work_time", r.max_work_time},
                {"min_ratio", r.min_ratio},
                {"max_ratio", r.max_ratio},
                {"max_spells", r.max_spells},
                {"max_spreadover", r.max_spreadover},
                {"min_break_between_spells", r.min_break_between_spells},
                {"signon_allowance", r.signon_allowance},
                {"signoff_allowance", r.signoff_allowance}};
}

Rules rules_from_json(const json& j) {
    Rules r;
    r.min_work_time = j.at("min_work_time").get<Minutes>();
    r.max_work_time = j.at("max_work_time").get<Minutes>();
    r.min_ratio = j.at("min_ratio").get<double>();
    r.max_ratio = j.at("max_ratio").get<double>();
    r.max_spells = j.at("max_spells").get<int>();
    r.max_spreadover = j.at("max_spreadover").get<Minutes>();
    r.min_break_between_spells = j.at("min_break_between_spells").get<Minutes>();
    r.signon_allowance = j.at("signon_allowance").get<Minutes>();
    r.signoff_allowance = j.at("signoff_allowance").get<Minutes>();
    return r;
}

json params_to_json(const Params& p) {
    json j{{"weights", {p.weights.w1(), p.weights.w2(), p.weights.w3(), p.weights.w4(), p.weights.w5()}},
           {"p", p.p},
           {"p_m", p.p_m},
           {"k", p.k},
           {"fixed_charge", p.fixed_charge},
           {"stagnation_limit", p.stagnation_limit},
           {"seed", p.seed},
           {"use_lp", p.use_lp},
           {"redundancy_pass", p.redundancy_pass}};
    if (p.max_iterations) {
        j["max_iterations"] = *p.max_iterations;
    } else {
        j["max_iterations"] = nullptr;
    }
    return j;
}

Params params_from_json(const json& j) {
    Params p;
    const auto& w = j.at("weights");
    p.weights = Weights(w.at(0).get<double>(), w.at(1).get<double>(), w.at(2).get<double>(),
                        w.at(3).get<double>(), w.at(4).get<double>());
    p.p = j.at("p").get<double>();
    p.p_m = j.at("p_m").get<double>();
    p.k = j.at("k").get<int>();
    p.fixed_charge = j.at("fixed_charge").get<Minutes>();
    p.stagnation_limit = j.at("stagnation_limit").get<long long>();
    if (!j.at("max_iterations").is_null()) {
        p.max_iterations = j.at("max_iterations").get<long long>();
    }
    p.seed = j.at("seed").get<std::uint64_t>();
    p.use_lp = j.at("use_lp").get<bool>();
    p.redundancy_pass = j.at("redundancy_pass").get<bool>();
    return p;
}

} // namespace

std::string instance_to_json_text(const Instance& inst) {
    json blocks = json::array();
    for (const Block& b : inst.blocks) {
        json ros = json::array();
        for (const ReliefOpportunity& ro : b.relief_opportunities) {
            ros.push_back(json{{"time_min", ro.time}, {"location", ro.location}});
        }
        blocks.push_back(json{{"id", b.id}, {"relief_opportunities", ros}});
    }
    json j{{"name", inst.name}, {"rules", rules_to_json(inst.rules)}, {"blocks", blocks}};
    return j.dump(2) + "\n";
}

Instance instance_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    std::vector<Block> blocks;
    for (const auto& jb : j.at("blocks")) {
        Block b;
        b.id = jb.at("id").get<std::string>();
        for (const auto& jro : jb.at("relief_opportunities")) {
            b.relief_opportunities.push_back(
                {jro.at("time_min").get<Minutes>(), jro.at("location").get<std::string>()});
        }
        blocks.push_back(std::move(b));
    }
    return Instance::build(j.at("name").get<std::string>(), std::move(blocks),
                           rules_from_json(j.at("rules")));
}

Instance load_instance(const std::string& path) {
    return instance_from_json_text(read_file(path));
}

void save_instance(const Instance& inst, const std::string& path) {
    write_file(path, instance_to_json_text(inst));
}

std::string solution_to_json_text(const Instance& inst, const CandidatePool& pool,
                                  const Params& params, const SolveResult& result) {
    json shifts = json::array();
    for (int id : result.best.shift_ids()) {
        const Shift& s = pool.shifts[id];
        json spells = json::array();
        for (const Spell& sp : s.spells) {
            spells.push_back(json{{"block", inst.blocks[sp.block_index].id},
                                  {"first", sp.first_piece},
                                  {"last", sp.last_piece}});
        }
        shifts.push_back(json{{"spells", spells}, {"cost", s.cost}});
    }
    json j{{"instance", inst.name},
           {"params", params_to_json(params)},
           {"shifts", shifts},
           {"objective", result.best.objective()},
           {"n_shifts", result.best.size()},
           {"iterations_run", result.iterations_run},
           {"seed", params.seed}};
    return j.dump(2) + "\n";
}

SolutionData solution_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    SolutionData data;
    data.instance = j.at("instance").get<std::string>();
    data.params = params_from_json(j.at("params"));
    for (const auto& js : j.at("shifts")) {
        SolutionShift s;
        s.cost = js.at("cost").get<Minutes>();
        for (const auto& jsp : js.at("spells")) {
            s.spells.push_back({jsp.at("block").get<std::string>(), jsp.at("first").get<int>(),
                                jsp.at("last").get<int>()});
        }
        data.shifts.push_back(std::move(s));
    }
    data.objective = j.at("objective").get<long long>();
    data.n_shifts = j.at("n_shifts").get<int>();
    data.iterations_run = j.at("iterations_run").get<long long>();
    data.seed = j.at("seed").get<std::uint64_t>();
    return data;
}

void save_solution(const Instance& inst, const CandidatePool& pool, const Params& params,
                   const SolveResult& result, const std::string& path) {
    write_file(path, solution_to_json_text(inst, pool, params, result));
}

SolutionData load_solution(const std::string& path) {
    return solution_from_json_text(read_file(path));
}

std::string trace_to_csv_text(const std::vector<IterationTrace>& trace) {
    std::string out = "iteration,p_s,removed_select,removed_mutate,objective,best_objective\n";
    char buf[64];
    for (const IterationTrace& row : trace) {
        out += std::to_string(row.iteration);
        std::snprintf(buf, sizeof(buf), ",%.17g,", row.p_s);
        out += buf;
        out += std::to_string(row.removed_select);
        out += ',';
        out += std::to_string(row.removed_mutate);
        out += ',';
        out += std::to_string(row.objective);
        out += ',';
        out += std::to_string(row.best_objective);
        out += '\n';
    }
    return out;
}

void save_trace(const std::vector<IterationTrace>& trace, const std::string& path) {
    write_file(path, trace_to_csv_text(trace));
}

std::vector<IterationTrace> load_trace(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file " + path);
    std::vector<IterationTrace> trace;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        IterationTrace row;
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        row.iteration = std::stoll(field);
        std::getline(ls, field, ',');
        row.p_s = std::stod(field);
        std::getline(ls, field, ',');
        row.removed_select = std::stoi(field);
        std::getline(ls, field, ',');
        row.removed_mutate = std::stoi(field);
        std::getline(ls, field, ',');
        row.objective = std::stoll(field);
        std::getline(ls, field, ',');
        row.best_objective = std::stoll(field);
        trace.push_back(row);
    }
    return trace;
}

std::string pool_dump_text(const Instance& inst, const CandidatePool& pool) {
    std::string out;
    for (const Shift& s : pool.shifts) {
        out += std::to_string(s.id);
        out += ' ';
        out += std::to_string(s.cost);
        for (const Spell& sp : s.spells) {
            out += ' ';
            out += inst.blocks[sp.block_index].id;
            out += ':';
            out += std::to_string(sp.first_piece);
            out += '-';
            out += std::to_string(sp.last_piece);
        }
        out += '\n';
    }
    return out;
}

std::string lp_dump_text(const FractionalCover& frac) {
    std::string out;
    char buf[64];
    for (std::size_t j = 0; j < frac.values.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%zu %.17g %d\n", j, frac.values[j],
                      frac.in_cover[j] ? 1 : 0);
        out += buf;
    }
    return out;
}

} // namespace iswo
