#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mwsn/geometry.hpp"

namespace mwsn::nwst {

struct GraphNode {
    geom::Point2D pos;
    bool terminal = false;
};

// Complete graph over terminals plus candidate relay nodes. Node weights are
// zero; each edge costs the Euclidean distance between its endpoints.
struct WeightedCompleteGraph {
    std::vector<GraphNode> nodes;

    double edge(int i, int j) const { return geom::distance(nodes[i].pos, nodes[j].pos); }
};

// Deduplicates coincident points; a candidate landing on a terminal collapses
// into the terminal node. Terminals must be non-empty.
WeightedCompleteGraph build_terminal_graph(std::span<const geom::Point2D> terminals,
                                           std::span<const geom::Point2D> candidates);

struct SteinerTree {
    std::vector<int> nodes;                     // ascending graph node indices
    std::vector<std::pair<int, int>> edges;     // (low, high) node indices
};

double tree_length(const WeightedCompleteGraph& g, const SteinerTree& t);

// Trees are disjoint node index sets while merging.
using Forest = std::vector<std::vector<int>>;

// kOriginal divides the merge cost over the number of trees joined; kModified
// divides over that number minus one, favoring high-degree merge nodes.
enum class QuotientVariant { kOriginal, kModified };

// Cheapest way to join >= 2 forest trees through node v: the connection cost
// to each tree is its single shortest edge from v, the best sub-collection is
// found by an ascending prefix scan, and the result is that cost divided per
// the variant. The forest must hold at least two trees.
double quotient_cost(const WeightedCompleteGraph& g, int v, const Forest& forest,
                     QuotientVariant variant);

// Greedy merge of terminal trees through minimum-quotient-cost nodes until a
// single tree spans every terminal. Ties prefer the lowest node index.
SteinerTree klein_ravi(const WeightedCompleteGraph& g, QuotientVariant variant);

}  // namespace mwsn::nwst
