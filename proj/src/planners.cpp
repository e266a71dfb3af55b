#include "mwsn/planners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "mwsn/assignment.hpp"
#include "mwsn/nwst.hpp"
#include "mwsn/wmc.hpp"

namespace mwsn::plan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using geom::chain_points;
using geom::distance;
using geom::kEps;
using geom::Point2D;

}  // namespace

void validate(const Instance& inst) {
    if (!(inst.rs > 0.0) || !std::isfinite(inst.rs))
        throw std::invalid_argument("instance: rs must be positive and finite");
    if (!(inst.rt > 0.0)) throw std::invalid_argument("instance: rt must be positive");
    if (!std::isfinite(inst.sink.x) || !std::isfinite(inst.sink.y))
        throw std::invalid_argument("instance: sink coordinates must be finite");
    if (inst.sensors.empty()) throw std::invalid_argument("instance: sensors must be non-empty");
    if (inst.targets.empty()) throw std::invalid_argument("instance: targets must be non-empty");
    for (size_t i = 0; i < inst.sensors.size(); ++i)
        if (!std::isfinite(inst.sensors[i].x) || !std::isfinite(inst.sensors[i].y))
            throw std::invalid_argument("instance: sensors[" + std::to_string(i) +
                                        "] coordinates must be finite");
    for (size_t i = 0; i < inst.targets.size(); ++i) {
        if (!std::isfinite(inst.targets[i].pos.x) || !std::isfinite(inst.targets[i].pos.y))
            throw std::invalid_argument("instance: targets[" + std::to_string(i) +
                                        "].pos coordinates must be finite");
        if (!(inst.targets[i].weight > 0.0) || !std::isfinite(inst.targets[i].weight))
            throw std::invalid_argument("instance: targets[" + std::to_string(i) +
                                        "].w must be positive and finite");
    }
}

bool unbounded_range(const Instance& inst) { return std::isinf(inst.rt); }

std::vector<ReferencePoint> build_reference_points(const Instance& inst) {
    std::vector<Point2D> positions;
    positions.reserve(inst.targets.size());
    for (const auto& t : inst.targets) positions.push_back(t.pos);

    std::vector<ReferencePoint> refs;
    for (size_t z = 0; z < inst.targets.size(); ++z) {
        ReferencePoint r;
        r.location = inst.targets[z].pos;
        r.kind = RefKind::kTargetLocation;
        r.own_target = static_cast<int>(z);
        r.coverable = geom::covered_target_ids(r.location, positions, inst.rs);
        refs.push_back(std::move(r));
    }
    for (size_t i = 0; i < inst.targets.size(); ++i)
        for (size_t j = i + 1; j < inst.targets.size(); ++j) {
            if (distance(inst.targets[i].pos, inst.targets[j].pos) <= kEps)
                continue;  // coincident targets: no usable crossing points
            const geom::Circle ci{inst.targets[i].pos, inst.rs};
            const geom::Circle cj{inst.targets[j].pos, inst.rs};
            for (const auto& p : geom::circle_pair_intersections(ci, cj)) {
                ReferencePoint r;
                r.location = p;
                r.kind = RefKind::kIntersection;
                r.coverable = geom::covered_target_ids(p, positions, inst.rs);
                refs.push_back(std::move(r));
            }
        }
    return refs;
}

double nearest_anchor_distance(const Point2D& p, std::span<const Point2D> anchors) {
    if (anchors.empty()) throw std::invalid_argument("nearest_anchor_distance: no anchors");
    double best = kInf;
    for (const auto& a : anchors) best = std::min(best, distance(p, a));
    return best;
}

int relay_points_needed(const ReferencePoint& p, std::span<const Point2D> anchors,
                        const Instance& inst) {
    const double eta = nearest_anchor_distance(p.location, anchors);
    if (p.kind == RefKind::kTargetLocation) return geom::ceil_steps(eta - inst.rs, inst.rt);
    return geom::ceil_steps(eta, inst.rt);
}

double uncovered_weight(std::span<const int> target_ids, std::span<const Point2D> covering,
                        const Instance& inst) {
    double total = 0.0;
    for (int id : target_ids) {
        bool covered = false;
        for (const auto& c : covering)
            if (distance(inst.targets[id].pos, c) <= inst.rs + kEps) {
                covered = true;
                break;
            }
        if (!covered) total += inst.targets[id].weight;
    }
    return total;
}

double coverage_density(double gained_weight, int points_needed) {
    if (points_needed <= 0) return kInf;
    return gained_weight / points_needed;
}

namespace {

// Targets a reference point claims for selection bookkeeping: a location
// point claims only its own target unless full sets are requested.
std::vector<int> claimed_set(const ReferencePoint& r, bool full_location_sets) {
    if (r.kind == RefKind::kTargetLocation && !full_location_sets) return {r.own_target};
    return r.coverable;
}

// Deterministic nearest anchor: the sink first, then points in insertion
// order; the earliest minimum wins.
Point2D nearest_anchor(const Point2D& p, const Point2D& sink, std::span<const Point2D> pts) {
    Point2D best = sink;
    double best_d = distance(p, sink);
    for (const auto& q : pts) {
        const double d = distance(p, q);
        if (d < best_d) {
            best_d = d;
            best = q;
        }
    }
    return best;
}

DeploymentPlan assemble_exact_assignment(std::string algorithm, const Instance& inst,
                                         std::vector<Point2D> points) {
    DeploymentPlan plan;
    plan.algorithm = std::move(algorithm);
    plan.points = std::move(points);
    if (plan.points.empty()) {
        for (size_t i = 0; i < inst.sensors.size(); ++i)
            plan.assignments.push_back(
                {static_cast<int>(i), true, -1, inst.sensors[i], 0.0});
        return plan;
    }
    const auto costs = assign::build_exact_costs(inst.sensors, plan.points);
    const auto res = assign::hungarian(costs);
    for (size_t i = 0; i < inst.sensors.size(); ++i) {
        const int col = res.column_of_row[i];
        if (col < static_cast<int>(plan.points.size()))
            plan.assignments.push_back({static_cast<int>(i), false, col, plan.points[col],
                                        costs.at(static_cast<int>(i), col)});
        else
            plan.assignments.push_back({static_cast<int>(i), true, -1, inst.sensors[i], 0.0});
    }
    return plan;
}

}  // namespace

DeploymentPlan wmcba(const Instance& inst) {
    validate(inst);
    const auto refs = build_reference_points(inst);
    const size_t m = inst.targets.size();

    wmc::WmcInstance cover;
    cover.budget = static_cast<int>(inst.sensors.size());
    for (const auto& t : inst.targets) cover.weights.push_back(t.weight);
    // Set index equals reference-point index: singletons for the location
    // points, full coverable sets for the intersection points.
    for (size_t z = 0; z < m; ++z) cover.sets.push_back({static_cast<int>(z)});
    for (size_t r = m; r < refs.size(); ++r) cover.sets.push_back(refs[r].coverable);

    const auto sol = wmc::greedy_wmc(cover);

    std::vector<assign::TaggedPoint> tagged;
    DeploymentPlan plan;
    plan.algorithm = "wmcba";
    for (int s : sol.chosen) {
        const auto& ref = refs[s];
        tagged.push_back({ref.location, ref.kind == RefKind::kTargetLocation});
        plan.points.push_back(ref.location);
        plan.selected_refs.push_back(ref);
    }
    if (plan.points.empty()) {
        for (size_t i = 0; i < inst.sensors.size(); ++i)
            plan.assignments.push_back(
                {static_cast<int>(i), true, -1, inst.sensors[i], 0.0});
        return plan;
    }

    const auto costs = assign::build_discounted_costs(inst.sensors, tagged, inst.rs);
    const auto res = assign::hungarian(costs);
    for (size_t i = 0; i < inst.sensors.size(); ++i) {
        const int col = res.column_of_row[i];
        if (col >= static_cast<int>(plan.points.size())) {
            plan.assignments.push_back({static_cast<int>(i), true, -1, inst.sensors[i], 0.0});
            continue;
        }
        const double move = costs.at(static_cast<int>(i), col);
        Point2D dest = inst.sensors[i];
        const double zeta = distance(inst.sensors[i], plan.points[col]);
        if (move > 0.0 && zeta > kEps) {
            // Stop on the sensing-disc boundary along the way to the point.
            const double f = move / zeta;
            dest.x += (plan.points[col].x - dest.x) * f;
            dest.y += (plan.points[col].y - dest.y) * f;
        }
        if (!tagged[col].target_location) dest = plan.points[col];
        plan.assignments.push_back({static_cast<int>(i), false, col, dest, move});
    }
    return plan;
}

namespace {

// Relay chain toward a reference point, stopping once every wanted target is
// covered; `covered` is updated for the emitted points.
std::vector<Point2D> chain_to_reference(const Point2D& from, const ReferencePoint& ref,
                                        const Instance& inst, std::vector<int> wanted,
                                        std::vector<char>& covered) {
    std::vector<int> remaining;
    for (int t : wanted)
        if (!covered[t]) remaining.push_back(t);
    std::vector<Point2D> pts;
    if (!remaining.empty()) {
        pts = chain_points(from, ref.location, inst.rt,
                           [&](const Point2D& last, std::span<const Point2D>) {
                               std::erase_if(remaining, [&](int t) {
                                   return distance(inst.targets[t].pos, last) <=
                                          inst.rs + kEps;
                               });
                               return remaining.empty();
                           });
    }
    for (const auto& p : pts)
        for (size_t t = 0; t < inst.targets.size(); ++t)
            if (!covered[t] && distance(inst.targets[t].pos, p) <= inst.rs + kEps)
                covered[t] = 1;
    return pts;
}

}  // namespace

std::vector<Point2D> regenerate_potential_points(std::span<const ReferencePoint> selected,
                                                 const Instance& inst, bool full_location_sets) {
    if (selected.empty()) return {};

    // Candidate junctions: Fermat points of Voronoi-adjacent triples over the
    // selected points and the sink.
    std::vector<Point2D> terminals = {inst.sink};
    for (const auto& r : selected) terminals.push_back(r.location);
    std::vector<Point2D> junctions;
    {
        std::vector<Point2D> uniq;
        for (const auto& p : terminals) {
            bool seen = false;
            for (const auto& q : uniq)
                if (distance(p, q) <= kEps) seen = true;
            if (!seen) uniq.push_back(p);
        }
        for (const auto& tri : geom::voronoi_neighbor_triples(uniq))
            junctions.push_back(geom::fermat_point(tri));
    }

    const auto g = nwst::build_terminal_graph(terminals, junctions);
    const auto tree = nwst::klein_ravi(g, nwst::QuotientVariant::kModified);

    // Targets each terminal node is responsible for.
    std::vector<std::vector<int>> node_targets(g.nodes.size());
    for (const auto& r : selected)
        for (size_t v = 0; v < g.nodes.size(); ++v)
            if (distance(g.nodes[v].pos, r.location) <= kEps) {
                for (int t : claimed_set(r, full_location_sets)) node_targets[v].push_back(t);
                break;
            }

    // Walk edges outward from the sink; each node's anchor is the relay that
    // ended the chain serving it, and chains start from the parent's anchor.
    std::vector<std::optional<Point2D>> anchor(g.nodes.size());
    for (size_t v = 0; v < g.nodes.size(); ++v)
        if (distance(g.nodes[v].pos, inst.sink) <= kEps) anchor[v] = inst.sink;

    std::vector<char> covered(inst.targets.size(), 0);
    std::vector<char> done(tree.edges.size(), 0);
    std::vector<Point2D> out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t e = 0; e < tree.edges.size(); ++e) {
            if (done[e]) continue;
            int pi = tree.edges[e].first, pj = tree.edges[e].second;
            const bool ai = anchor[pi].has_value(), aj = anchor[pj].has_value();
            if (ai && aj) {
                done[e] = 1;
                progress = true;
                continue;
            }
            if (!ai && !aj) continue;
            if (aj) std::swap(pi, pj);

            const Point2D start = *anchor[pi];
            const Point2D dest = g.nodes[pj].pos;
            std::vector<Point2D> pts;
            if (g.nodes[pj].terminal) {
                ReferencePoint proxy;
                proxy.location = dest;
                pts = chain_to_reference(start, proxy, inst, node_targets[pj], covered);
            } else if (distance(start, dest) > inst.rt + kEps) {
                pts = chain_points(start, dest, inst.rt,
                                   [&](const Point2D& last, std::span<const Point2D>) {
                                       return distance(last, dest) <= inst.rt + kEps;
                                   });
                for (const auto& p : pts)
                    for (size_t t = 0; t < inst.targets.size(); ++t)
                        if (!covered[t] &&
                            distance(inst.targets[t].pos, p) <= inst.rs + kEps)
                            covered[t] = 1;
            }
            anchor[pj] = pts.empty() ? start : pts.back();
            out.insert(out.end(), pts.begin(), pts.end());
            done[e] = 1;
            progress = true;
        }
    }
    return out;
}

DeploymentPlan stba(const Instance& inst, const PlannerOptions& opts) {
    validate(inst);
    const auto refs = build_reference_points(inst);
    const size_t m = inst.targets.size();
    const int budget = static_cast<int>(inst.sensors.size());

    std::vector<std::vector<int>> claimed(refs.size());
    for (size_t c = 0; c < refs.size(); ++c)
        claimed[c] = claimed_set(refs[c], opts.full_location_sets);

    std::vector<Point2D> points;           // L
    std::vector<int> selection;            // chosen reference indices, in order
    std::vector<char> claimed_union(m, 0); // targets claimed by selections
    std::vector<char> covered(m, 0);       // targets covered by points in L
    std::vector<char> in_y(refs.size(), 0);
    std::vector<char> blocked(refs.size(), 0);
    std::vector<double> eta(refs.size());  // distance to nearest of sink + L

    auto recompute_state = [&]() {
        std::fill(covered.begin(), covered.end(), 0);
        for (size_t t = 0; t < m; ++t)
            for (const auto& p : points)
                if (distance(inst.targets[t].pos, p) <= inst.rs + kEps) {
                    covered[t] = 1;
                    break;
                }
        for (size_t c = 0; c < refs.size(); ++c) {
            eta[c] = distance(refs[c].location, inst.sink);
            for (const auto& p : points)
                eta[c] = std::min(eta[c], distance(refs[c].location, p));
        }
    };
    auto add_point = [&](const Point2D& p) {
        points.push_back(p);
        for (size_t t = 0; t < m; ++t)
            if (!covered[t] && distance(inst.targets[t].pos, p) <= inst.rs + kEps)
                covered[t] = 1;
        for (size_t c = 0; c < refs.size(); ++c)
            eta[c] = std::min(eta[c], distance(refs[c].location, p));
    };
    auto all_covered = [&]() {
        for (size_t t = 0; t < m; ++t)
            if (!covered[t]) return false;
        return true;
    };

    recompute_state();
    while (true) {
        // Inner selection loop: claim the densest reachable reference point.
        while (!all_covered()) {
            int best = -1;
            double best_rho = -1.0, best_eta = kInf;
            for (size_t c = 0; c < refs.size(); ++c) {
                if (in_y[c] || blocked[c]) continue;
                bool novel = false;
                for (int t : claimed[c])
                    if (!claimed_union[t]) novel = true;
                if (!novel) continue;

                double gain = 0.0;
                for (int t : refs[c].coverable)
                    if (!covered[t]) gain += inst.targets[t].weight;
                if (refs[c].kind == RefKind::kTargetLocation && !opts.full_location_sets) {
                    gain = covered[refs[c].own_target] ? 0.0
                                                       : inst.targets[refs[c].own_target].weight;
                }

                int needed = refs[c].kind == RefKind::kTargetLocation
                                 ? geom::ceil_steps(eta[c] - inst.rs, inst.rt)
                                 : geom::ceil_steps(eta[c], inst.rt);
                // A positive-gain point always takes at least one relay: the
                // sink itself never covers targets.
                if (needed == 0 && gain > 0.0) needed = 1;
                if (needed > budget - static_cast<int>(points.size())) continue;

                const double rho = coverage_density(gain, needed);
                // Ties fall through to the lower eta, then the lower index
                // (ascending scan keeps the first winner).
                if (rho > best_rho || (rho == best_rho && eta[c] < best_eta - kEps)) {
                    best = static_cast<int>(c);
                    best_rho = rho;
                    best_eta = eta[c];
                }
            }
            if (best < 0) break;

            const Point2D from = nearest_anchor(refs[best].location, inst.sink, points);
            std::vector<char> covered_probe = covered;
            const auto pts =
                chain_to_reference(from, refs[best], inst, claimed[best], covered_probe);
            if (static_cast<int>(pts.size()) > budget - static_cast<int>(points.size())) {
                blocked[best] = 1;  // the chain would blow the budget
                continue;
            }
            for (const auto& p : pts) add_point(p);
            in_y[best] = 1;
            selection.push_back(best);
            for (int t : claimed[best]) claimed_union[t] = 1;
        }
        if (all_covered()) break;
        if (selection.empty()) break;

        std::vector<ReferencePoint> chosen;
        for (int c : selection) chosen.push_back(refs[c]);
        const auto rebuilt =
            regenerate_potential_points(chosen, inst, opts.full_location_sets);
        if (rebuilt.size() < points.size()) {
            points = rebuilt;
            recompute_state();
            std::fill(blocked.begin(), blocked.end(), 0);
        } else {
            break;
        }
    }

    DeploymentPlan plan = assemble_exact_assignment("stba", inst, std::move(points));
    for (int c : selection) plan.selected_refs.push_back(refs[c]);
    return plan;
}

DeploymentPlan gba(const Instance& inst) {
    validate(inst);
    const int budget = static_cast<int>(inst.sensors.size());
    std::vector<Point2D> anchors = {inst.sink};  // sink plus served targets
    std::vector<char> served(inst.targets.size(), 0);
    std::vector<Point2D> points;

    while (true) {
        int best = -1, best_needed = 0;
        double best_rho = -1.0, best_eta = kInf;
        for (size_t t = 0; t < inst.targets.size(); ++t) {
            if (served[t]) continue;
            const double eta = nearest_anchor_distance(inst.targets[t].pos, anchors);
            const int needed = std::max(1, geom::ceil_steps(eta, inst.rt));
            if (needed > budget - static_cast<int>(points.size())) continue;
            const double rho = inst.targets[t].weight / needed;
            if (rho > best_rho || (rho == best_rho && eta < best_eta - kEps)) {
                best = static_cast<int>(t);
                best_rho = rho;
                best_eta = eta;
                best_needed = needed;
            }
        }
        if (best < 0) break;

        const Point2D tpos = inst.targets[best].pos;
        const Point2D start = nearest_anchor(tpos, inst.sink, anchors);
        const double eta = distance(start, tpos);
        if (eta <= kEps) {
            points.push_back(tpos);
        } else {
            // Equally spaced relays ending exactly on the target.
            for (int q = 1; q <= best_needed; ++q) {
                if (q == best_needed) {
                    points.push_back(tpos);
                } else {
                    const double f = static_cast<double>(q) / best_needed;
                    points.push_back(
                        {start.x + (tpos.x - start.x) * f, start.y + (tpos.y - start.y) * f});
                }
            }
        }
        anchors.push_back(tpos);
        served[best] = 1;
    }
    return assemble_exact_assignment("gba", inst, std::move(points));
}

PlanMetrics evaluate_plan(const Instance& inst, const DeploymentPlan& plan) {
    validate(inst);
    PlanMetrics metrics;
    std::vector<Point2D> dests;
    for (const auto& a : plan.assignments) {
        if (a.idle) continue;
        dests.push_back(a.destination);
        metrics.total_movement += a.distance;
        ++metrics.sensors_used;
    }
    for (size_t t = 0; t < inst.targets.size(); ++t)
        for (const auto& d : dests)
            if (distance(inst.targets[t].pos, d) <= inst.rs + kEps) {
                metrics.covered_targets.push_back(static_cast<int>(t));
                metrics.covered_weight += inst.targets[t].weight;
                break;
            }
    metrics.connected = check_connectivity(dests, inst.sink, inst.rt);
    return metrics;
}

bool check_connectivity(std::span<const Point2D> points, const Point2D& sink, double rt) {
    if (points.empty() || std::isinf(rt)) return true;
    const size_t n = points.size();
    std::vector<char> reached(n, 0);
    std::vector<size_t> queue;
    for (size_t i = 0; i < n; ++i)
        if (distance(points[i], sink) <= rt + kEps) {
            reached[i] = 1;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        const size_t cur = queue.back();
        queue.pop_back();
        for (size_t j = 0; j < n; ++j)
            if (!reached[j] && distance(points[cur], points[j]) <= rt + kEps) {
                reached[j] = 1;
                queue.push_back(j);
            }
    }
    for (size_t i = 0; i < n; ++i)
        if (!reached[i]) return false;
    return true;
}

}  // namespace mwsn::plan
