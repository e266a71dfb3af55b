#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "mwsn/nwst.hpp"

using mwsn::geom::Point2D;
using namespace mwsn::nwst;

namespace {

// Equilateral triangle of side 10 with its center as the only candidate:
// every vertex pair is 10 apart, the center is 10/sqrt(3) from each vertex.
WeightedCompleteGraph triangle_with_center() {
    const double h = 5.0 * std::sqrt(3.0);
    const std::vector<Point2D> terminals = {{0.0, 0.0}, {10.0, 0.0}, {5.0, h}};
    const std::vector<Point2D> candidates = {{5.0, h / 3.0}};
    return build_terminal_graph(terminals, candidates);
}

Forest singleton_forest(const WeightedCompleteGraph& g) {
    Forest forest;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].terminal) forest.push_back({static_cast<int>(i)});
    return forest;
}

bool spans_all_terminals(const WeightedCompleteGraph& g, const SteinerTree& t) {
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (!g.nodes[i].terminal) continue;
        if (std::find(t.nodes.begin(), t.nodes.end(), static_cast<int>(i)) == t.nodes.end())
            return false;
    }
    return true;
}

bool is_connected_tree(const SteinerTree& t) {
    if (t.nodes.empty()) return false;
    if (t.edges.size() + 1 != t.nodes.size()) return false;
    std::vector<int> stack = {t.nodes.front()};
    std::vector<int> seen = {t.nodes.front()};
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : t.edges) {
            const int other = a == cur ? b : (b == cur ? a : -1);
            if (other < 0) continue;
            if (std::find(seen.begin(), seen.end(), other) == seen.end()) {
                seen.push_back(other);
                stack.push_back(other);
            }
        }
    }
    return seen.size() == t.nodes.size();
}

double mst_length(const WeightedCompleteGraph& g, const std::vector<int>& nodes) {
    if (nodes.size() <= 1) return 0.0;
    std::vector<bool> in_tree(nodes.size(), false);
    std::vector<double> best(nodes.size(), std::numeric_limits<double>::infinity());
    best[0] = 0.0;
    double total = 0.0;
    for (size_t round = 0; round < nodes.size(); ++round) {
        int pick = -1;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (!in_tree[i] && (pick < 0 || best[i] < best[pick])) pick = static_cast<int>(i);
        in_tree[pick] = true;
        total += best[pick];
        for (size_t i = 0; i < nodes.size(); ++i)
            if (!in_tree[i]) best[i] = std::min(best[i], g.edge(nodes[pick], nodes[i]));
    }
    return total;
}

// Exhaustive Steiner optimum: every candidate subset, each spanned by its MST.
double exhaustive_steiner(const WeightedCompleteGraph& g) {
    std::vector<int> terminals;
    std::vector<int> candidates;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        (g.nodes[i].terminal ? terminals : candidates).push_back(static_cast<int>(i));
    double best = std::numeric_limits<double>::infinity();
    const size_t limit = size_t{1} << candidates.size();
    for (size_t mask = 0; mask < limit; ++mask) {
        std::vector<int> nodes = terminals;
        for (size_t c = 0; c < candidates.size(); ++c)
            if (mask & (size_t{1} << c)) nodes.push_back(candidates[c]);
        best = std::min(best, mst_length(g, nodes));
    }
    return best;
}

}  // namespace

TEST_CASE("terminal graph construction and dedup") {
    const std::vector<Point2D> one = {{3.0, 4.0}};
    const auto single = build_terminal_graph(one, {});
    CHECK(single.nodes.size() == 1);
    CHECK(single.nodes[0].terminal);

    const std::vector<Point2D> three = {{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}};
    const std::vector<Point2D> mid = {{5.0, 5.0}};
    const auto four = build_terminal_graph(three, mid);
    CHECK(four.nodes.size() == 4);
    CHECK(four.edge(0, 1) == doctest::Approx(10.0));

    const std::vector<Point2D> coincident = {{0.0, 0.0}};
    const auto collapsed = build_terminal_graph(three, coincident);
    CHECK(collapsed.nodes.size() == 3);
    CHECK(collapsed.nodes[0].terminal);

    const std::vector<Point2D> dup_terms = {{0.0, 0.0}, {0.0, 0.0}, {5.0, 0.0}};
    CHECK(build_terminal_graph(dup_terms, {}).nodes.size() == 2);

    CHECK_THROWS_AS(build_terminal_graph({}, mid), std::invalid_argument);
}

TEST_CASE("quotient costs on the triangle-with-center graph") {
    const auto g = triangle_with_center();
    const auto forest = singleton_forest(g);
    REQUIRE(forest.size() == 3);

    CHECK(quotient_cost(g, 0, forest, QuotientVariant::kOriginal) == doctest::Approx(5.0));
    CHECK(quotient_cost(g, 3, forest, QuotientVariant::kOriginal) ==
          doctest::Approx(10.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(quotient_cost(g, 0, forest, QuotientVariant::kModified) == doctest::Approx(10.0));
    CHECK(quotient_cost(g, 3, forest, QuotientVariant::kModified) ==
          doctest::Approx(5.0 * std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("quotient cost rejects degenerate forests") {
    const auto g = triangle_with_center();
    const Forest one_tree = {{0, 1, 2}};
    CHECK_THROWS_AS(quotient_cost(g, 3, one_tree, QuotientVariant::kOriginal),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_cost(g, 9, singleton_forest(g), QuotientVariant::kOriginal),
                    std::invalid_argument);
}

TEST_CASE("greedy merge picks direct edges under the per-tree denominator") {
    const auto g = triangle_with_center();
    const auto tree = klein_ravi(g, QuotientVariant::kOriginal);
    CHECK(spans_all_terminals(g, tree));
    CHECK(is_connected_tree(tree));
    const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}};
    CHECK(tree.edges == expected);
    CHECK(tree_length(g, tree) == doctest::Approx(20.0).epsilon(1e-9));
}

TEST_CASE("greedy merge routes through the center under the per-merge denominator") {
    const auto g = triangle_with_center();
    const auto tree = klein_ravi(g, QuotientVariant::kModified);
    CHECK(spans_all_terminals(g, tree));
    CHECK(is_connected_tree(tree));
    const std::vector<std::pair<int, int>> expected = {{0, 3}, {1, 3}, {2, 3}};
    CHECK(tree.edges == expected);
    CHECK(tree_length(g, tree) == doctest::Approx(10.0 * std::sqrt(3.0)).epsilon(1e-9));
    CHECK(tree_length(g, tree) <=
          tree_length(g, klein_ravi(g, QuotientVariant::kOriginal)) + 1e-9);
}

TEST_CASE("single terminal short-circuits") {
    const std::vector<Point2D> one = {{1.0, 2.0}};
    const std::vector<Point2D> cands = {{5.0, 5.0}};
    const auto g = build_terminal_graph(one, cands);
    for (const auto variant : {QuotientVariant::kOriginal, QuotientVariant::kModified}) {
        const auto tree = klein_ravi(g, variant);
        CHECK(tree.nodes == std::vector<int>{0});
        CHECK(tree.edges.empty());
        CHECK(tree_length(g, tree) == 0.0);
    }
}

TEST_CASE("random instances stay within twice the exhaustive optimum") {
    std::mt19937_64 rng(7301);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    for (int round = 0; round < 80; ++round) {
        const int n_terms = 2 + static_cast<int>(rng() % 3);  // 2..4
        const int n_cands = static_cast<int>(rng() % 3);      // 0..2
        std::vector<Point2D> terminals;
        std::vector<Point2D> candidates;
        for (int i = 0; i < n_terms; ++i) terminals.push_back({coord(rng), coord(rng)});
        for (int i = 0; i < n_cands; ++i) candidates.push_back({coord(rng), coord(rng)});
        const auto g = build_terminal_graph(terminals, candidates);
        const double opt = exhaustive_steiner(g);
        for (const auto variant : {QuotientVariant::kOriginal, QuotientVariant::kModified}) {
            const auto tree = klein_ravi(g, variant);
            CHECK(spans_all_terminals(g, tree));
            CHECK(is_connected_tree(tree));
            const double len = tree_length(g, tree);
            CHECK(len >= opt - 1e-9);
            CHECK(len <= 2.0 * opt + 1e-9);
        }
    }
}
