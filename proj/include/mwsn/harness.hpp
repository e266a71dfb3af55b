#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mwsn/planners.hpp"

namespace mwsn::harness {

// Uniform random instance on a rectangular field with the sink at the center.
struct GenParams {
    int sensors = 30;
    int targets = 30;
    double field_w = 600.0;
    double field_h = 600.0;
    double rs = 20.0;
    double rt = 20.0;  // may be infinity
    bool unit_weights = false;  // otherwise weights are uniform in [1, 10]
};

plan::Instance gen_instance(const GenParams& params, uint64_t seed);

// Deterministic 64-bit seed derivation for (parameter index, trial index).
uint64_t mix_seed(uint64_t master, uint64_t param_index, uint64_t trial_index);

enum class Scenario { kDense, kRmwt, kMwt };
enum class SweepParam { kTargets, kSensors, kField, kRt };

// dense: 300 sensors, 30 unit-weight targets. rmwt: 20 sensors, unbounded rt.
// mwt: 100 sensors. All on a 600x600 field with rs = rt = 20 and weights
// uniform in [1, 10] unless stated; the swept parameter overrides its default.
struct ScenarioSpec {
    Scenario scenario = Scenario::kMwt;
    SweepParam param = SweepParam::kSensors;
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;
    int trials = 50;
    uint64_t seed = 1;
    bool timing = false;  // off: the ms column is 0 so runs are byte-identical
};

struct SweepRow {
    std::string scenario;
    std::string param;
    double value = 0.0;
    std::string algo;
    int trial = 0;
    uint64_t seed = 0;
    double covered_weight = 0.0;
    double total_movement = 0.0;
    int sensors_used = 0;
    bool connected = false;
    int64_t ms = 0;
};

// Rows ordered by (value, trial, algorithm name). dense and mwt run gba and
// stba; rmwt runs gba, stba, and wmcba.
std::vector<SweepRow> run_sweep(const ScenarioSpec& spec);

std::string to_csv(std::span<const SweepRow> rows);

Scenario scenario_from_name(const std::string& name);
SweepParam param_from_name(const std::string& name);

void save_instance(const plan::Instance& inst, const std::string& path);
plan::Instance load_instance(const std::string& path);
void save_plan(const plan::DeploymentPlan& p, const std::string& path);
plan::DeploymentPlan load_plan(const std::string& path);

}  // namespace mwsn::harness
