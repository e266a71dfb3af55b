#include "mwsn/nwst.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mwsn::nwst {

WeightedCompleteGraph build_terminal_graph(std::span<const geom::Point2D> terminals,
                                           std::span<const geom::Point2D> candidates) {
    if (terminals.empty()) throw std::invalid_argument("build_terminal_graph: no terminals");
    WeightedCompleteGraph g;
    auto find_node = [&](const geom::Point2D& p) {
        for (size_t i = 0; i < g.nodes.size(); ++i)
            if (geom::distance(g.nodes[i].pos, p) <= geom::kEps) return static_cast<int>(i);
        return -1;
    };
    for (const auto& t : terminals) {
        const int at = find_node(t);
        if (at < 0) g.nodes.push_back({t, true});
    }
    for (const auto& c : candidates) {
        const int at = find_node(c);
        if (at < 0) g.nodes.push_back({c, false});
    }
    return g;
}

double tree_length(const WeightedCompleteGraph& g, const SteinerTree& t) {
    double total = 0.0;
    for (const auto& [a, b] : t.edges) total += g.edge(a, b);
    return total;
}

namespace {

struct MergePlan {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<int> tree_ids;       // forest indices joined through v
    std::vector<int> connect_nodes;  // nearest node of each joined tree
};

// Connection cost from v into each tree is the single shortest edge; the best
// sub-collection of >= 2 trees is a prefix of the trees sorted by that cost.
MergePlan best_merge_through(const WeightedCompleteGraph& g, int v, const Forest& forest,
                             QuotientVariant variant) {
    struct Link {
        double xi;
        int tree;
        int node;
    };
    std::vector<Link> links;
    links.reserve(forest.size());
    for (size_t t = 0; t < forest.size(); ++t) {
        double best = std::numeric_limits<double>::infinity();
        int best_node = -1;
        for (int u : forest[t]) {
            const double d = u == v ? 0.0 : g.edge(v, u);
            if (d < best) {
                best = d;
                best_node = u;
            }
        }
        links.push_back({best, static_cast<int>(t), best_node});
    }
    std::stable_sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
        if (a.xi != b.xi) return a.xi < b.xi;
        return a.tree < b.tree;
    });

    MergePlan plan;
    double sum = 0.0;
    for (size_t k = 0; k < links.size(); ++k) {
        sum += links[k].xi;
        const size_t joined = k + 1;
        if (joined < 2) continue;
        const double denom =
            variant == QuotientVariant::kOriginal ? double(joined) : double(joined - 1);
        const double cost = sum / denom;
        if (cost < plan.cost) {  // first minimum keeps the smallest prefix
            plan.cost = cost;
            plan.tree_ids.clear();
            plan.connect_nodes.clear();
            for (size_t x = 0; x < joined; ++x) {
                plan.tree_ids.push_back(links[x].tree);
                plan.connect_nodes.push_back(links[x].node);
            }
        }
    }
    return plan;
}

}  // namespace

double quotient_cost(const WeightedCompleteGraph& g, int v, const Forest& forest,
                     QuotientVariant variant) {
    if (forest.size() < 2) throw std::invalid_argument("quotient_cost: fewer than two trees");
    if (v < 0 || v >= static_cast<int>(g.nodes.size()))
        throw std::invalid_argument("quotient_cost: node out of range");
    return best_merge_through(g, v, forest, variant).cost;
}

SteinerTree klein_ravi(const WeightedCompleteGraph& g, QuotientVariant variant) {
    Forest forest;
    std::vector<std::vector<std::pair<int, int>>> forest_edges;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].terminal) {
            forest.push_back({static_cast<int>(i)});
            forest_edges.push_back({});
        }
    if (forest.empty()) throw std::invalid_argument("klein_ravi: no terminals");

    while (forest.size() > 1) {
        int best_v = -1;
        MergePlan best;
        for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
            MergePlan plan = best_merge_through(g, v, forest, variant);
            if (plan.cost < best.cost) {
                best = std::move(plan);
                best_v = v;
            }
        }

        std::vector<int> nodes;
        std::vector<std::pair<int, int>> edges;
        bool v_inside = false;
        for (size_t x = 0; x < best.tree_ids.size(); ++x) {
            const auto& tree = forest[best.tree_ids[x]];
            nodes.insert(nodes.end(), tree.begin(), tree.end());
            const auto& te = forest_edges[best.tree_ids[x]];
            edges.insert(edges.end(), te.begin(), te.end());
            if (std::find(tree.begin(), tree.end(), best_v) != tree.end())
                v_inside = true;
            else
                edges.push_back({std::min(best_v, best.connect_nodes[x]),
                                 std::max(best_v, best.connect_nodes[x])});
        }
        if (!v_inside) nodes.push_back(best_v);
        std::sort(nodes.begin(), nodes.end());

        std::vector<int> doomed = best.tree_ids;
        std::sort(doomed.rbegin(), doomed.rend());
        for (int t : doomed) {
            forest.erase(forest.begin() + t);
            forest_edges.erase(forest_edges.begin() + t);
        }
        forest.push_back(std::move(nodes));
        forest_edges.push_back(std::move(edges));
    }

    SteinerTree tree;
    tree.nodes = forest.front();
    tree.edges = forest_edges.front();
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

}  // namespace mwsn::nwst
