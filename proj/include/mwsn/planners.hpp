#pragma once

#include <span>
#include <string>
#include <vector>

#include "mwsn/geometry.hpp"

namespace mwsn::plan {

struct Target {
    geom::Point2D pos;
    double weight = 1.0;
};

// A deployment problem: move some of the sensors so that covered target
// weight is maximized while every moved sensor stays connected to the sink
// through hops of at most rt. rt may be infinite (no hop limit).
struct Instance {
    double rs = 0.0;  // sensing radius
    double rt = 0.0;  // communication radius, may be infinity
    geom::Point2D sink;
    std::vector<geom::Point2D> sensors;
    std::vector<Target> targets;
};

// Throws std::invalid_argument naming the offending field.
void validate(const Instance& inst);

bool unbounded_range(const Instance& inst);

enum class RefKind { kTargetLocation, kIntersection };

// A candidate position a sensor could occupy, with the target ids it covers.
struct ReferencePoint {
    geom::Point2D location;
    RefKind kind = RefKind::kTargetLocation;
    int own_target = -1;         // the target sitting at a target-location point
    std::vector<int> coverable;  // ascending target ids within rs of location
};

// One reference point per target location followed by the intersection points
// of every pair of target sensing circles (pairs in ascending lexicographic
// order, each pair's points in lexicographic coordinate order). Coincident
// target pairs are degenerate and contribute no intersection points.
std::vector<ReferencePoint> build_reference_points(const Instance& inst);

// Minimum distance from p to any anchor; anchors must be non-empty.
double nearest_anchor_distance(const geom::Point2D& p, std::span<const geom::Point2D> anchors);

// Relay points needed to reach p from the nearest anchor with hops of rt:
// a target-location point only needs to be approached within rs, so its
// distance is discounted by rs (never below zero).
int relay_points_needed(const ReferencePoint& p, std::span<const geom::Point2D> anchors,
                        const Instance& inst);

// Total weight of the given targets not within rs of any covering point.
// The sink never covers targets, so callers pass deployed points only.
double uncovered_weight(std::span<const int> target_ids,
                        std::span<const geom::Point2D> covering, const Instance& inst);

// Weight gained per point spent; infinite when nothing needs to be spent.
double coverage_density(double gained_weight, int points_needed);

struct SensorAssignment {
    int sensor = -1;
    bool idle = true;
    int point_index = -1;  // occupied point served; -1 when idle or unknown
    geom::Point2D destination;
    double distance = 0.0;
};

struct DeploymentPlan {
    std::string algorithm;
    std::vector<geom::Point2D> points;  // occupied positions L
    std::vector<SensorAssignment> assignments;
    std::vector<ReferencePoint> selected_refs;  // selection trace (stba)
};

struct PlannerOptions {
    // When set, a target-location reference point claims every target its
    // disc can cover rather than only its own target.
    bool full_location_sets = false;
};

// Coverage-first planner: picks reference points greedily by uncovered weight
// (a max-coverage reduction), then assigns sensors by a minimum-cost matching
// with the sensing-radius discount. Intended for unbounded rt; with finite rt
// it never fabricates relays, so the result may be disconnected.
DeploymentPlan wmcba(const Instance& inst);

// Density-guided planner: repeatedly claims the reference point with the best
// weight-per-relay ratio, chaining relay points back to the network, then
// rebuilds the relay backbone through a Steiner-tree pass when that shrinks
// the deployment. Sensors are assigned by minimum-cost matching.
DeploymentPlan stba(const Instance& inst, const PlannerOptions& opts = {});

// Baseline: serves one whole target at a time, laying equally spaced relays
// from the nearest already-served target (or the sink).
DeploymentPlan gba(const Instance& inst);

// Relay backbone rebuild used by stba: a Steiner tree over the selected
// reference points and the sink (candidate junctions at Fermat points of
// Voronoi-adjacent triples), walked edge by edge to emit relay chains.
std::vector<geom::Point2D> regenerate_potential_points(std::span<const ReferencePoint> selected,
                                                       const Instance& inst,
                                                       bool full_location_sets);

struct PlanMetrics {
    double covered_weight = 0.0;
    std::vector<int> covered_targets;  // ascending ids
    double total_movement = 0.0;
    int sensors_used = 0;
    bool connected = true;
};

// Recomputes every metric from the instance and the plan's final sensor
// destinations; idle sensors do not sense or relay.
PlanMetrics evaluate_plan(const Instance& inst, const DeploymentPlan& plan);

// True when every point reaches the sink in the hop graph with edges of
// length at most rt + eps. Vacuously true for no points or unbounded rt.
bool check_connectivity(std::span<const geom::Point2D> points, const geom::Point2D& sink,
                        double rt);

}  // namespace mwsn::plan
