#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "mwsn/assignment.hpp"

using mwsn::assign::build_discounted_costs;
using mwsn::assign::build_exact_costs;
using mwsn::assign::ColumnKind;
using mwsn::assign::CostMatrix;
using mwsn::assign::hungarian;
using mwsn::assign::TaggedPoint;
using mwsn::geom::Point2D;

namespace {

// Oracle: exhaustive minimum over all row-to-column permutations.
double permutation_minimum(const CostMatrix& m) {
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double total = 0.0;
        for (int i = 0; i < m.n; ++i) total += m.at(i, perm[i]);
        best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CostMatrix random_matrix(std::mt19937_64& rng, int n) {
    CostMatrix m;
    m.n = n;
    m.columns.assign(n, {ColumnKind::kIntersection, {}});
    for (int i = 0; i < n * n; ++i)
        m.entries.push_back(100.0 * std::generate_canonical<double, 53>(rng));
    return m;
}

}  // namespace

TEST_CASE("hungarian: worked 2x2 picks the cross assignment") {
    CostMatrix m;
    m.n = 2;
    m.entries = {1, 2, 2, 4};
    m.columns.assign(2, {ColumnKind::kIntersection, {}});
    const auto res = hungarian(m);
    CHECK(res.total_cost == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(res.column_of_row == std::vector<int>{1, 0});
}

TEST_CASE("hungarian: all-zero matrix costs zero") {
    CostMatrix m;
    m.n = 3;
    m.entries.assign(9, 0.0);
    m.columns.assign(3, {ColumnKind::kDummy, {}});
    const auto res = hungarian(m);
    CHECK(res.total_cost == 0.0);
    std::vector<int> sorted = res.column_of_row;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2});
}

TEST_CASE("hungarian: equals permutation enumeration on 100 seeded matrices") {
    std::mt19937_64 rng(7301);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);  // up to 7
        const auto m = random_matrix(rng, n);
        const auto res = hungarian(m);
        CHECK(res.total_cost == doctest::Approx(permutation_minimum(m)).epsilon(1e-9));
        std::vector<int> sorted = res.column_of_row;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);  // a permutation
    }
}

TEST_CASE("hungarian: rejects negative and non-finite entries") {
    CostMatrix m;
    m.n = 2;
    m.entries = {1, -2, 2, 4};
    m.columns.assign(2, {ColumnKind::kIntersection, {}});
    CHECK_THROWS_AS((void)hungarian(m), std::invalid_argument);
    m.entries = {1, std::numeric_limits<double>::quiet_NaN(), 2, 4};
    CHECK_THROWS_AS((void)hungarian(m), std::invalid_argument);
}

TEST_CASE("discounted costs: target columns subtract the sensing radius") {
    const std::vector<Point2D> sensors = {{0, 0}, {100, 0}};
    const std::vector<TaggedPoint> points = {{{30, 0}, true}, {{50, 0}, false}};
    const auto m = build_discounted_costs(sensors, points, 20.0);
    REQUIRE(m.n == 2);
    CHECK(m.at(0, 0) == doctest::Approx(10.0).epsilon(1e-12));  // 30 - 20
    CHECK(m.at(0, 1) == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(m.at(1, 0) == doctest::Approx(50.0).epsilon(1e-12));  // 70 - 20
    CHECK(m.at(1, 1) == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(m.columns[0].kind == ColumnKind::kTargetLocation);
    CHECK(m.columns[1].kind == ColumnKind::kIntersection);
}

TEST_CASE("discounted costs: sensor already inside the disc pays nothing") {
    const std::vector<Point2D> sensors = {{5, 0}};
    const std::vector<TaggedPoint> points = {{{0, 0}, true}};
    const auto m = build_discounted_costs(sensors, points, 20.0);
    CHECK(m.at(0, 0) == 0.0);
}

TEST_CASE("cost builders: dummy padding and the budget guard") {
    const std::vector<Point2D> sensors = {{0, 0}, {1, 0}, {2, 0}};
    const std::vector<Point2D> points = {{5, 5}};
    const auto m = build_exact_costs(sensors, points);
    REQUIRE(m.n == 3);
    CHECK(m.columns[0].kind == ColumnKind::kIntersection);
    CHECK(m.columns[1].kind == ColumnKind::kDummy);
    CHECK(m.columns[2].kind == ColumnKind::kDummy);
    for (int i = 0; i < 3; ++i) {
        CHECK(m.at(i, 1) == 0.0);
        CHECK(m.at(i, 2) == 0.0);
    }

    const std::vector<Point2D> too_many = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    CHECK_THROWS_AS((void)build_exact_costs(sensors, too_many), std::invalid_argument);
}

TEST_CASE("assignment through dummies keeps idle sensors free") {
    std::mt19937_64 rng(7302);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const int real = 1 + static_cast<int>(rng() % n);
        std::vector<Point2D> sensors, points;
        for (int i = 0; i < n; ++i)
            sensors.push_back({100.0 * std::generate_canonical<double, 53>(rng),
                               100.0 * std::generate_canonical<double, 53>(rng)});
        for (int j = 0; j < real; ++j)
            points.push_back({100.0 * std::generate_canonical<double, 53>(rng),
                              100.0 * std::generate_canonical<double, 53>(rng)});
        const auto m = build_exact_costs(sensors, points);
        const auto res = hungarian(m);
        CHECK(res.total_cost == doctest::Approx(permutation_minimum(m)).epsilon(1e-9));
        double direct = 0.0;
        for (int i = 0; i < n; ++i)
            if (res.column_of_row[i] < real)
                direct += mwsn::geom::distance(sensors[i], points[res.column_of_row[i]]);
        CHECK(res.total_cost == doctest::Approx(direct).epsilon(1e-9));
    }
}
