#include "mwsn/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "mwsn/errors.hpp"

namespace mwsn::harness {

namespace {

// splitmix64: tiny, fast, and fully reproducible across platforms.
uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
double next_double(uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

uint64_t mix_seed(uint64_t master, uint64_t param_index, uint64_t trial_index) {
    uint64_t state = master;
    uint64_t a = splitmix64(state) ^ (param_index * 0xD1B54A32D192ED03ULL);
    uint64_t b = splitmix64(a) ^ (trial_index * 0xA24BAED4963EE407ULL);
    return splitmix64(b);
}

plan::Instance gen_instance(const GenParams& params, uint64_t seed) {
    if (params.sensors < 1) throw ValidationError("gen: sensors must be at least 1");
    if (params.targets < 1) throw ValidationError("gen: targets must be at least 1");
    if (!(params.field_w > 0.0) || !(params.field_h > 0.0))
        throw ValidationError("gen: field dimensions must be positive");
    if (!(params.rs > 0.0)) throw ValidationError("gen: rs must be positive");
    if (!(params.rt > 0.0)) throw ValidationError("gen: rt must be positive");

    plan::Instance inst;
    inst.rs = params.rs;
    inst.rt = params.rt;
    inst.sink = {params.field_w / 2.0, params.field_h / 2.0};
    uint64_t state = seed;
    // Draw order is part of the reproducibility contract: sensor coordinates,
    // then target coordinates, then target weights.
    for (int i = 0; i < params.sensors; ++i) {
        const double x = next_double(state) * params.field_w;
        const double y = next_double(state) * params.field_h;
        inst.sensors.push_back({x, y});
    }
    for (int i = 0; i < params.targets; ++i) {
        const double x = next_double(state) * params.field_w;
        const double y = next_double(state) * params.field_h;
        inst.targets.push_back({{x, y}, 1.0});
    }
    if (!params.unit_weights)
        for (auto& t : inst.targets) t.weight = 1.0 + 9.0 * next_double(state);
    return inst;
}

Scenario scenario_from_name(const std::string& name) {
    if (name == "dense") return Scenario::kDense;
    if (name == "rmwt") return Scenario::kRmwt;
    if (name == "mwt") return Scenario::kMwt;
    throw ValidationError("sweep: unknown scenario '" + name + "'");
}

SweepParam param_from_name(const std::string& name) {
    if (name == "targets") return SweepParam::kTargets;
    if (name == "sensors") return SweepParam::kSensors;
    if (name == "field") return SweepParam::kField;
    if (name == "rt") return SweepParam::kRt;
    throw ValidationError("sweep: unknown param '" + name + "'");
}

namespace {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::kDense: return "dense";
        case Scenario::kRmwt: return "rmwt";
        default: return "mwt";
    }
}

const char* param_name(SweepParam p) {
    switch (p) {
        case SweepParam::kTargets: return "targets";
        case SweepParam::kSensors: return "sensors";
        case SweepParam::kField: return "field";
        default: return "rt";
    }
}

GenParams scenario_defaults(Scenario s) {
    GenParams p;
    switch (s) {
        case Scenario::kDense:
            p.sensors = 300;
            p.unit_weights = true;
            break;
        case Scenario::kRmwt:
            p.sensors = 20;
            p.rt = std::numeric_limits<double>::infinity();
            break;
        case Scenario::kMwt:
            p.sensors = 100;
            break;
    }
    return p;
}

GenParams apply_param(GenParams base, Scenario s, SweepParam param, double value) {
    switch (param) {
        case SweepParam::kTargets:
            base.targets = static_cast<int>(std::llround(value));
            break;
        case SweepParam::kSensors:
            base.sensors = static_cast<int>(std::llround(value));
            break;
        case SweepParam::kField:
            base.field_w = base.field_h = value;
            break;
        case SweepParam::kRt:
            if (s == Scenario::kRmwt)
                throw ValidationError("sweep: rt is unbounded in the rmwt scenario");
            base.rt = value;
            break;
    }
    return base;
}

std::vector<std::string> scenario_algos(Scenario s) {
    if (s == Scenario::kRmwt) return {"gba", "stba", "wmcba"};
    return {"gba", "stba"};  // already in name order
}

plan::DeploymentPlan solve_by_name(const std::string& algo, const plan::Instance& inst) {
    if (algo == "wmcba") return plan::wmcba(inst);
    if (algo == "stba") return plan::stba(inst);
    if (algo == "gba") return plan::gba(inst);
    throw ValidationError("solve: unknown algorithm '" + algo + "'");
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioSpec& spec) {
    if (!(spec.step > 0.0)) throw ValidationError("sweep: step must be positive");
    if (spec.hi < spec.lo) throw ValidationError("sweep: range high is below low");
    if (spec.trials < 1) throw ValidationError("sweep: trials must be at least 1");

    std::vector<double> values;
    for (double v = spec.lo; v <= spec.hi + 1e-9; v += spec.step) values.push_back(v);

    const GenParams defaults = scenario_defaults(spec.scenario);
    const auto algos = scenario_algos(spec.scenario);
    std::vector<SweepRow> rows;
    for (size_t vi = 0; vi < values.size(); ++vi) {
        const GenParams params = apply_param(defaults, spec.scenario, spec.param, values[vi]);
        for (int trial = 0; trial < spec.trials; ++trial) {
            const uint64_t seed = mix_seed(spec.seed, vi, static_cast<uint64_t>(trial));
            const plan::Instance inst = gen_instance(params, seed);
            for (const auto& algo : algos) {
                const auto t0 = std::chrono::steady_clock::now();
                plan::DeploymentPlan deployment;
                try {
                    deployment = solve_by_name(algo, inst);
                } catch (const std::exception& e) {
                    throw ValidationError("sweep: " + algo + " failed on seed " +
                                          std::to_string(seed) + ": " + e.what());
                }
                const auto t1 = std::chrono::steady_clock::now();
                const auto metrics = plan::evaluate_plan(inst, deployment);
                SweepRow row;
                row.scenario = scenario_name(spec.scenario);
                row.param = param_name(spec.param);
                row.value = values[vi];
                row.algo = algo;
                row.trial = trial;
                row.seed = seed;
                row.covered_weight = metrics.covered_weight;
                row.total_movement = metrics.total_movement;
                row.sensors_used = metrics.sensors_used;
                row.connected = metrics.connected;
                row.ms = spec.timing
                             ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                   .count()
                             : 0;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string to_csv(std::span<const SweepRow> rows) {
    std::string out =
        "scenario,param,value,algo,trial,seed,covered_weight,total_movement,"
        "sensors_used,connected,ms\n";
    for (const auto& r : rows) {
        out += r.scenario;
        out += ',';
        out += r.param;
        out += ',';
        out += format_double(r.value);
        out += ',';
        out += r.algo;
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.covered_weight);
        out += ',';
        out += format_double(r.total_movement);
        out += ',';
        out += std::to_string(r.sensors_used);
        out += ',';
        out += r.connected ? "true" : "false";
        out += ',';
        out += std::to_string(r.ms);
        out += '\n';
    }
    return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json point_json(const geom::Point2D& p) { return ordered_json::array({p.x, p.y}); }

geom::Point2D point_from_json(const ordered_json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw IoError("parse error at " + field + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace

void save_instance(const plan::Instance& inst, const std::string& path) {
    ordered_json j;
    j["rs"] = inst.rs;
    if (std::isinf(inst.rt))
        j["rt"] = "inf";
    else
        j["rt"] = inst.rt;
    j["sink"] = point_json(inst.sink);
    auto sensors = ordered_json::array();
    for (const auto& s : inst.sensors) sensors.push_back(point_json(s));
    j["sensors"] = std::move(sensors);
    auto targets = ordered_json::array();
    for (const auto& t : inst.targets) {
        ordered_json tj;
        tj["pos"] = point_json(t.pos);
        tj["w"] = t.weight;
        targets.push_back(std::move(tj));
    }
    j["targets"] = std::move(targets);
    write_text_file(path, j.dump(2) + "\n");
}

plan::Instance load_instance(const std::string& path) {
    const ordered_json j = read_json_file(path);
    plan::Instance inst;
    if (!j.contains("rs") || !j["rs"].is_number())
        throw IoError("parse error at rs: expected a number");
    inst.rs = j["rs"].get<double>();
    if (!j.contains("rt")) throw IoError("parse error at rt: missing");
    if (j["rt"].is_string()) {
        if (j["rt"].get<std::string>() != "inf")
            throw IoError("parse error at rt: expected a number or \"inf\"");
        inst.rt = std::numeric_limits<double>::infinity();
    } else if (j["rt"].is_number()) {
        inst.rt = j["rt"].get<double>();
    } else {
        throw IoError("parse error at rt: expected a number or \"inf\"");
    }
    if (!j.contains("sink")) throw IoError("parse error at sink: missing");
    inst.sink = point_from_json(j["sink"], "sink");
    if (!j.contains("sensors") || !j["sensors"].is_array())
        throw IoError("parse error at sensors: expected an array");
    for (size_t i = 0; i < j["sensors"].size(); ++i)
        inst.sensors.push_back(
            point_from_json(j["sensors"][i], "sensors[" + std::to_string(i) + "]"));
    if (!j.contains("targets") || !j["targets"].is_array())
        throw IoError("parse error at targets: expected an array");
    for (size_t i = 0; i < j["targets"].size(); ++i) {
        const auto& tj = j["targets"][i];
        const std::string field = "targets[" + std::to_string(i) + "]";
        if (!tj.is_object() || !tj.contains("pos") || !tj.contains("w") ||
            !tj["w"].is_number())
            throw IoError("parse error at " + field + ": expected {pos, w}");
        inst.targets.push_back(
            {point_from_json(tj["pos"], field + ".pos"), tj["w"].get<double>()});
    }
    try {
        plan::validate(inst);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    return inst;
}

void save_plan(const plan::DeploymentPlan& p, const std::string& path) {
    ordered_json j;
    j["algorithm"] = p.algorithm;
    auto points = ordered_json::array();
    for (const auto& pt : p.points) points.push_back(point_json(pt));
    j["points"] = std::move(points);
    auto assignments = ordered_json::array();
    for (const auto& a : p.assignments) {
        ordered_json aj;
        aj["sensor"] = a.sensor;
        if (a.idle) {
            aj["idle"] = true;
        } else {
            aj["dest"] = point_json(a.destination);
            aj["dist"] = a.distance;
        }
        assignments.push_back(std::move(aj));
    }
    j["assignments"] = std::move(assignments);
    write_text_file(path, j.dump(2) + "\n");
}

plan::DeploymentPlan load_plan(const std::string& path) {
    const ordered_json j = read_json_file(path);
    plan::DeploymentPlan p;
    if (!j.contains("algorithm") || !j["algorithm"].is_string())
        throw IoError("parse error at algorithm: expected a string");
    p.algorithm = j["algorithm"].get<std::string>();
    if (!j.contains("points") || !j["points"].is_array())
        throw IoError("parse error at points: expected an array");
    for (size_t i = 0; i < j["points"].size(); ++i)
        p.points.push_back(point_from_json(j["points"][i], "points[" + std::to_string(i) + "]"));
    if (!j.contains("assignments") || !j["assignments"].is_array())
        throw IoError("parse error at assignments: expected an array");
    for (size_t i = 0; i < j["assignments"].size(); ++i) {
        const auto& aj = j["assignments"][i];
        const std::string field = "assignments[" + std::to_string(i) + "]";
        if (!aj.is_object() || !aj.contains("sensor") || !aj["sensor"].is_number_integer())
            throw IoError("parse error at " + field + ": expected {sensor, ...}");
        plan::SensorAssignment a;
        a.sensor = aj["sensor"].get<int>();
        if (aj.contains("idle")) {
            if (!aj["idle"].is_boolean() || !aj["idle"].get<bool>())
                throw IoError("parse error at " + field + ".idle: expected true");
            a.idle = true;
        } else {
            if (!aj.contains("dest") || !aj.contains("dist") || !aj["dist"].is_number())
                throw IoError("parse error at " + field + ": expected dest and dist");
            a.idle = false;
            a.destination = point_from_json(aj["dest"], field + ".dest");
            a.distance = aj["dist"].get<double>();
        }
        p.assignments.push_back(std::move(a));
    }
    return p;
}

}  // namespace mwsn::harness
