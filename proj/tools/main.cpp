#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iswo/engine.hpp"
#include "iswo/generator.hpp"
#include "iswo/io.hpp"
#include "iswo/lp.hpp"
#include "iswo/oracle.hpp"
#include "iswo/shiftgen.hpp"

namespace {

using namespace iswo;

struct ParamFlags {
    double w1 = 0.20, w2 = 0.10, w3 = 0.10, w4 = 0.20, w5 = 0.40;
    double p = 0.3;
    double pm = 0.05;
    int k = 2;
    long long stagnation = 1000;
    long long max_iter = -1;
    int fixed_charge = 2000;
    std::uint64_t seed = 1;
    bool no_lp = false;
    bool no_redundancy = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--w1", w1, "weight of the work-time criterion");
        cmd->add_option("--w2", w2, "weight of the work/spreadover ratio criterion");
        cmd->add_option("--w3", w3, "weight of the piece-count criterion");
        cmd->add_option("--w4", w4, "weight of the spell-count criterion");
        cmd->add_option("--w5", w5, "weight of the LP fractional-cover criterion");
        cmd->add_option("--p", p, "selection offset");
        cmd->add_option("--pm", pm, "mutation rate");
        cmd->add_option("--k", k, "construction choice width");
        cmd->add_option("--stagnation", stagnation, "iterations without improvement before stopping");
        cmd->add_option("--max-iter", max_iter, "hard iteration cap (-1 = none)");
        cmd->add_option("--fixed-charge", fixed_charge, "per-shift charge added to the cost");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_flag("--no-lp", no_lp, "skip the LP relaxation and drop criterion 5");
        cmd->add_flag("--no-redundancy", no_redundancy, "skip the per-iteration redundancy pass");
    }

    Params to_params() const {
        Params out;
        out.weights = Weights(w1, w2, w3, w4, w5);
        out.p = p;
        out.p_m = pm;
        out.k = k;
        out.fixed_charge = fixed_charge;
        out.stagnation_limit = stagnation;
        if (max_iter >= 0) out.max_iterations = max_iter;
        out.seed = seed;
        out.use_lp = !no_lp;
        out.redundancy_pass = !no_redundancy;
        return out;
    }
};

SolveResult run_algo(const std::string& algo, const Instance& inst, const CandidatePool& pool,
                     const Params& params, const FractionalCover* frac) {
    if (algo == "iswo") return solve_iswo(inst, pool, params, frac);
    if (algo == "swo") return solve_swo(inst, pool, params, frac);
    if (algo == "greedy") return solve_greedy(inst, pool, params, frac);
    throw std::runtime_error("unknown algorithm '" + algo + "'");
}

std::string trace_path_for(const std::string& out) {
    std::string stem = out;
    if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json") {
        stem = stem.substr(0, stem.size() - 5);
    }
    return stem + ".trace.csv";
}

int cmd_generate(const GenConfig& cfg, const std::string& out) {
    Instance inst = generate_instance(cfg);
    ValidationReport report = validate_instance(inst);
    if (!report.ok()) {
        for (const std::string& p : report.problems) std::cerr << "invalid: " << p << "\n";
        return 1;
    }
    save_instance(inst, out);
    std::cout << "wrote " << out << " (" << inst.blocks.size() << " blocks, " << inst.n_pieces()
              << " pieces)\n";
    return 0;
}

int cmd_pool(const std::string& instance_path, const std::string& out) {
    Instance inst = load_instance(instance_path);
    CandidatePool pool = enumerate_shifts(inst);
    const std::string dump = pool_dump_text(inst, pool);
    if (out.empty()) {
        std::cout << dump;
    } else {
        write_file(out, dump);
    }
    std::cerr << pool.size() << " candidate shifts, " << inst.n_pieces() << " pieces\n";
    return 0;
}

int cmd_lp(const std::string& instance_path, const std::string& out, int fixed_charge) {
    Instance inst = load_instance(instance_path);
    CandidatePool pool = enumerate_shifts(inst);
    FractionalCover frac = fractional_cover(pool, fixed_charge);
    const std::string dump = lp_dump_text(frac);
    if (out.empty()) {
        std::cout << dump;
    } else {
        write_file(out, dump);
    }
    std::fprintf(stderr, "lp objective %.6f, cover [%g, %g]\n", frac.objective, frac.b, frac.a);
    return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& algo, const ParamFlags& flags,
              const std::string& out, std::string trace_out) {
    Instance inst = load_instance(instance_path);
    CandidatePool pool = enumerate_shifts(inst);
    Params params = flags.to_params();
    SolveResult result = run_algo(algo, inst, pool, params, nullptr);

    save_solution(inst, pool, params, result, out);
    if (trace_out.empty()) trace_out = trace_path_for(out);
    save_trace(result.trace, trace_out);

    std::cout << "objective " << result.best.objective() << ", shifts " << result.best.size()
              << ", iterations " << result.iterations_run << "\n";
    return 0;
}

int cmd_oracle(const std::string& instance_path, const std::string& fixtures) {
    Instance inst = load_instance(instance_path);
    CandidatePool pool = enumerate_shifts(inst);
    OracleResult r = exact_min_cover(pool, 2000);

    std::string ids;
    for (std::size_t i = 0; i < r.optimal_shift_ids.size(); ++i) {
        if (i) ids += ':';
        ids += std::to_string(r.optimal_shift_ids[i]);
    }
    std::cout << "optimal objective " << r.optimal_objective << ", shifts " << ids << ", nodes "
              << r.nodes_explored << "\n";
    if (!fixtures.empty()) {
        std::string row = inst.name + "," + std::to_string(r.optimal_objective) + "," + ids + "\n";
        std::string existing;
        try {
            existing = read_file(fixtures);
        } catch (const std::exception&) {
            // first row of a new fixture file
        }
        write_file(fixtures, existing + row);
    }
    return 0;
}

struct BenchCell {
    std::string instance;
    std::string algo;
    std::string seed; // "M" on mean rows
    double shifts = 0, cost = 0, objective = 0, iterations = 0, wall_ms = 0;
    std::string error;
};

std::string bench_row(const BenchCell& c, bool mean) {
    char buf[256];
    if (!c.error.empty()) {
        std::string msg = c.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        return c.instance + "," + c.algo + "," + c.seed + ",error," + msg + "\n";
    }
    if (mean) {
        std::snprintf(buf, sizeof(buf), "%s,%s,M,%.1f,%.1f,%.1f,%.1f,%.1f\n", c.instance.c_str(),
                      c.algo.c_str(), c.shifts, c.cost, c.objective, c.iterations, c.wall_ms);
    } else {
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.0f,%.0f,%.0f,%.0f,%.0f\n", c.instance.c_str(),
                      c.algo.c_str(), c.seed.c_str(), c.shifts, c.cost, c.objective, c.iterations,
                      c.wall_ms);
    }
    return buf;
}

int cmd_bench(const std::string& suite_dir, std::vector<std::string> algos,
              std::vector<std::uint64_t> seeds, const ParamFlags& flags, const std::string& out,
              std::string solutions_dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(suite_dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .json instances under " << suite_dir << "\n";
        return 1;
    }
    std::sort(algos.begin(), algos.end());
    std::sort(seeds.begin(), seeds.end());
    if (solutions_dir.empty()) solutions_dir = out + ".solutions";
    fs::create_directories(solutions_dir);

    std::vector<BenchCell> cells;
    for (const std::string& file : files) {
        Instance inst;
        CandidatePool pool;
        FractionalCover frac;
        bool pool_ok = false;
        std::string pool_error;
        try {
            inst = load_instance(file);
            pool = enumerate_shifts(inst);
            if (!flags.no_lp) frac = fractional_cover(pool, flags.fixed_charge);
            pool_ok = true;
        } catch (const std::exception& e) {
            pool_error = e.what();
        }

        for (const std::string& algo : algos) {
            for (std::uint64_t seed : seeds) {
                BenchCell cell;
                cell.instance = pool_ok ? inst.name : fs::path(file).stem().string();
                cell.algo = algo;
                cell.seed = std::to_string(seed);
                if (!pool_ok) {
                    cell.error = pool_error;
                    cells.push_back(cell);
                    continue;
                }
                try {
                    ParamFlags run_flags = flags;
                    run_flags.seed = seed;
                    Params params = run_flags.to_params();
                    const auto t0 = std::chrono::steady_clock::now();
                    SolveResult result =
                        run_algo(algo, inst, pool, params, flags.no_lp ? nullptr : &frac);
                    const auto t1 = std::chrono::steady_clock::now();

                    const std::string sol_path = solutions_dir + "/" + cell.instance + "-" + algo +
                                                 "-" + std::to_string(seed) + ".json";
                    save_solution(inst, pool, params, result, sol_path);
                    save_trace(result.trace, trace_path_for(sol_path));

                    // cross-check: the objective must recompute from the file
                    SolutionData data = load_solution(sol_path);
                    long long recomputed = 0;
                    Minutes total_cost = 0;
                    for (const SolutionShift& s : data.shifts) {
                        recomputed += s.cost + data.params.fixed_charge;
                        total_cost += s.cost;
                    }
                    if (recomputed != result.best.objective()) {
                        throw std::runtime_error("objective recompute mismatch: file " +
                                                 std::to_string(recomputed) + " vs engine " +
                                                 std::to_string(result.best.objective()));
                    }

                    cell.shifts = result.best.size();
                    cell.cost = total_cost;
                    cell.objective = static_cast<double>(recomputed);
                    cell.iterations = static_cast<double>(result.iterations_run);
                    cell.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                } catch (const std::exception& e) {
                    cell.error = e.what();
                }
                cells.push_back(cell);
            }
        }
    }

    std::string csv = "instance,algorithm,seed,best_shifts,best_cost,objective,iterations,wall_ms\n";
    for (const BenchCell& c : cells) csv += bench_row(c, false);

    // per (instance, algorithm) mean rows, mirroring the usual benchmark table footer
    std::map<std::pair<std::string, std::string>, std::vector<const BenchCell*>> groups;
    for (const BenchCell& c : cells) {
        if (c.error.empty()) groups[{c.instance, c.algo}].push_back(&c);
    }
    for (const auto& [key, group] : groups) {
        BenchCell mean;
        mean.instance = key.first;
        mean.algo = key.second;
        mean.seed = "M";
        for (const BenchCell* c : group) {
            mean.shifts += c->shifts;
            mean.cost += c->cost;
            mean.objective += c->objective;
            mean.iterations += c->iterations;
            mean.wall_ms += c->wall_ms;
        }
        const double n = static_cast<double>(group.size());
        mean.shifts /= n;
        mean.cost /= n;
        mean.objective /= n;
        mean.iterations /= n;
        mean.wall_ms /= n;
        csv += bench_row(mean, true);
    }

    write_file(out, csv);
    std::cout << "wrote " << out << " (" << cells.size() << " runs)\n";
    bool any_error = false;
    for (const BenchCell& c : cells) {
        if (!c.error.empty()) {
            std::cerr << "failed: " << c.instance << "/" << c.algo << "/" << c.seed << ": "
                      << c.error << "\n";
            any_error = true;
        }
    }
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"driver scheduling by squeaky wheel optimisation"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random instance file");
    std::string gen_preset;
    GenConfig cfg;
    std::string gen_out = "instance.json";
    gen->add_option("--preset", gen_preset, "tiny or medium")
        ->check(CLI::IsMember({"tiny", "medium"}));
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--name", cfg.name, "instance name");
    gen->add_option("--blocks", cfg.n_blocks, "number of vehicle blocks");
    gen->add_option("--ros-min", cfg.ros_min, "minimum ROs per block");
    gen->add_option("--ros-max", cfg.ros_max, "maximum ROs per block");
    gen->add_option("--span-start", cfg.span_start, "day span start, minutes");
    gen->add_option("--span-end", cfg.span_end, "day span end, minutes");
    gen->add_option("--block-min", cfg.block_len_min, "minimum block length, minutes");
    gen->add_option("--block-max", cfg.block_len_max, "maximum block length, minutes");
    gen->add_option("--rule-min-work", cfg.rules.min_work_time);
    gen->add_option("--rule-max-work", cfg.rules.max_work_time);
    gen->add_option("--rule-min-ratio", cfg.rules.min_ratio);
    gen->add_option("--rule-max-ratio", cfg.rules.max_ratio);
    gen->add_option("--rule-max-spells", cfg.rules.max_spells);
    gen->add_option("--rule-max-spreadover", cfg.rules.max_spreadover);
    gen->add_option("--rule-min-break", cfg.rules.min_break_between_spells);
    gen->add_option("--rule-signon", cfg.rules.signon_allowance);
    gen->add_option("--rule-signoff", cfg.rules.signoff_allowance);
    gen->add_option("--out", gen_out, "output path");

    // pool
    auto* pool_cmd = app.add_subcommand("pool", "enumerate and dump the candidate pool");
    std::string pool_instance, pool_out;
    pool_cmd->add_option("--instance", pool_instance, "instance file")->required();
    pool_cmd->add_option("--out", pool_out, "dump path (stdout when omitted)");

    // lp
    auto* lp_cmd = app.add_subcommand("lp", "solve the fractional-cover relaxation");
    std::string lp_instance, lp_out;
    int lp_fixed = 2000;
    lp_cmd->add_option("--instance", lp_instance, "instance file")->required();
    lp_cmd->add_option("--out", lp_out, "dump path (stdout when omitted)");
    lp_cmd->add_option("--fixed-charge", lp_fixed, "per-shift charge");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run a solver on an instance");
    std::string solve_instance, solve_algo = "iswo", solve_out = "solution.json", solve_trace;
    ParamFlags solve_flags;
    solve_cmd->add_option("--instance", solve_instance, "instance file")->required();
    solve_cmd->add_option("--algo", solve_algo, "iswo, swo or greedy")
        ->check(CLI::IsMember({"iswo", "swo", "greedy"}));
    solve_flags.attach(solve_cmd);
    solve_cmd->add_option("--out", solve_out, "solution file path");
    solve_cmd->add_option("--trace", solve_trace, "trace CSV path (derived from --out when omitted)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum for desk-scale instances");
    std::string oracle_instance, oracle_fixtures;
    oracle_cmd->add_option("--instance", oracle_instance, "instance file")->required();
    oracle_cmd->add_option("--fixtures", oracle_fixtures, "CSV to append the optimum to");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "cross-product benchmark over a suite directory");
    std::string bench_suite, bench_out = "bench.csv", bench_solutions;
    std::vector<std::string> bench_algos{"iswo", "swo"};
    std::vector<std::uint64_t> bench_seeds{1, 2, 3};
    ParamFlags bench_flags;
    bench_cmd->add_option("--suite", bench_suite, "directory of instance .json files")->required();
    bench_cmd->add_option("--algos", bench_algos, "algorithms to run")->delimiter(',');
    bench_cmd->add_option("--seeds", bench_seeds, "seeds to run")->delimiter(',');
    bench_flags.attach(bench_cmd);
    bench_cmd->add_option("--out", bench_out, "benchmark CSV path");
    bench_cmd->add_option("--solutions-dir", bench_solutions, "where per-run solution files go");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (!gen_preset.empty()) {
                GenConfig preset = gen_preset == "tiny" ? tiny_preset(cfg.seed) : medium_preset(cfg.seed);
                if (!cfg.name.empty()) preset.name = cfg.name;
                cfg = preset;
            }
            return cmd_generate(cfg, gen_out);
        }
        if (pool_cmd->parsed()) return cmd_pool(pool_instance, pool_out);
        if (lp_cmd->parsed()) return cmd_lp(lp_instance, lp_out, lp_fixed);
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_instance, solve_algo, solve_flags, solve_out, solve_trace);
        }
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_instance, oracle_fixtures);
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_suite, bench_algos, bench_seeds, bench_flags, bench_out,
                             bench_solutions);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
