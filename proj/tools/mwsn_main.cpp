#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwsn/errors.hpp"
#include "mwsn/harness.hpp"
#include "mwsn/planners.hpp"

namespace {

double parse_range_value(const std::string& text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
        throw mwsn::ValidationError("expected a number or 'inf', got '" + text + "'");
    return v;
}

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

SweepRange parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw mwsn::ValidationError("--range expects lo:hi:step, got '" + text + "'");
    SweepRange r;
    r.lo = parse_range_value(text.substr(0, first));
    r.hi = parse_range_value(text.substr(first + 1, second - first - 1));
    r.step = parse_range_value(text.substr(second + 1));
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"Mobile sensor deployment planner"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    mwsn::harness::GenParams gp;
    std::string gen_rt = "20";
    uint64_t gen_seed = 1;
    std::string gen_out;
    std::vector<double> gen_field = {600.0, 600.0};
    gen->add_option("--sensors", gp.sensors, "Number of mobile sensors");
    gen->add_option("--targets", gp.targets, "Number of targets");
    gen->add_option("--field", gen_field, "Field width and height")->expected(2);
    gen->add_option("--rs", gp.rs, "Sensing radius");
    gen->add_option("--rt", gen_rt, "Transmission radius (number or 'inf')");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("-o,--output", gen_out, "Output instance file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Plan a deployment for an instance");
    std::string solve_algo;
    std::string solve_in;
    std::string solve_out;
    solve->add_option("--algo", solve_algo, "Algorithm: wmcba, stba, or gba")->required();
    solve->add_option("-i,--instance", solve_in, "Instance file")->required();
    solve->add_option("-o,--output", solve_out, "Output plan file")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "Score a plan against an instance");
    std::string eval_in;
    std::string eval_plan;
    eval->add_option("-i,--instance", eval_in, "Instance file")->required();
    eval->add_option("-p,--plan", eval_plan, "Plan file")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a seeded scenario sweep");
    std::string sweep_scenario;
    std::string sweep_param;
    std::string sweep_range;
    int sweep_trials = 50;
    uint64_t sweep_seed = 1;
    std::string sweep_out;
    bool sweep_timing = false;
    sweep->add_option("--scenario", sweep_scenario, "Scenario: dense, rmwt, or mwt")
        ->required();
    sweep->add_option("--param", sweep_param, "Swept parameter: targets, sensors, field, or rt")
        ->required();
    sweep->add_option("--range", sweep_range, "Parameter range as lo:hi:step")->required();
    sweep->add_option("--trials", sweep_trials, "Trials per parameter value");
    sweep->add_option("--seed", sweep_seed, "Master seed");
    sweep->add_flag("--timing", sweep_timing,
                    "Record wall-clock ms per solve (off keeps output byte-stable)");
    sweep->add_option("-o,--output", sweep_out, "Output CSV file")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        gp.field_w = gen_field[0];
        gp.field_h = gen_field[1];
        gp.rt = parse_range_value(gen_rt);
        const auto inst = mwsn::harness::gen_instance(gp, gen_seed);
        mwsn::harness::save_instance(inst, gen_out);
    } else if (solve->parsed()) {
        const auto inst = mwsn::harness::load_instance(solve_in);
        mwsn::plan::DeploymentPlan deployment;
        if (solve_algo == "wmcba")
            deployment = mwsn::plan::wmcba(inst);
        else if (solve_algo == "stba")
            deployment = mwsn::plan::stba(inst);
        else if (solve_algo == "gba")
            deployment = mwsn::plan::gba(inst);
        else
            throw mwsn::ValidationError("solve: unknown algorithm '" + solve_algo + "'");
        mwsn::harness::save_plan(deployment, solve_out);
    } else if (eval->parsed()) {
        const auto inst = mwsn::harness::load_instance(eval_in);
        const auto deployment = mwsn::harness::load_plan(eval_plan);
        const auto metrics = mwsn::plan::evaluate_plan(inst, deployment);
        nlohmann::ordered_json j;
        j["covered_weight"] = metrics.covered_weight;
        j["covered_targets"] = metrics.covered_targets;
        j["total_movement"] = metrics.total_movement;
        j["sensors_used"] = metrics.sensors_used;
        j["connected"] = metrics.connected;
        std::printf("%s\n", j.dump(2).c_str());
    } else if (sweep->parsed()) {
        mwsn::harness::ScenarioSpec spec;
        spec.scenario = mwsn::harness::scenario_from_name(sweep_scenario);
        spec.param = mwsn::harness::param_from_name(sweep_param);
        const SweepRange range = parse_range(sweep_range);
        spec.lo = range.lo;
        spec.hi = range.hi;
        spec.step = range.step;
        spec.trials = sweep_trials;
        spec.seed = sweep_seed;
        spec.timing = sweep_timing;
        const auto rows = mwsn::harness::run_sweep(spec);
        const std::string csv = mwsn::harness::to_csv(rows);
        std::ofstream out(sweep_out, std::ios::binary);
        if (!out) throw mwsn::IoError("cannot open " + sweep_out + " for writing");
        out << csv;
        if (!out) throw mwsn::IoError("write failed for " + sweep_out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mwsn::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const mwsn::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
