#include "mwsn/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mwsn::assign {

AssignmentResult hungarian(const CostMatrix& costs) {
    const int n = costs.n;
    if (n <= 0 || costs.entries.size() != static_cast<size_t>(n) * n ||
        costs.columns.size() != static_cast<size_t>(n))
        throw std::invalid_argument("hungarian: matrix is not square");
    for (double e : costs.entries)
        if (!std::isfinite(e) || e < 0.0)
            throw std::invalid_argument("hungarian: entries must be non-negative and finite");

    // Shortest augmenting paths with row/column potentials (1-based).
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = costs.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    AssignmentResult res;
    res.column_of_row.assign(n, -1);
    for (int j = 1; j <= n; ++j) res.column_of_row[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) res.total_cost += costs.at(i, res.column_of_row[i]);
    return res;
}

namespace {

CostMatrix padded_matrix(std::span<const geom::Point2D> sensors, size_t real_columns) {
    if (real_columns > sensors.size())
        throw std::invalid_argument("cost matrix: more destination points than sensors");
    CostMatrix m;
    m.n = static_cast<int>(sensors.size());
    m.entries.assign(static_cast<size_t>(m.n) * m.n, 0.0);
    m.columns.assign(m.n, CostColumn{ColumnKind::kDummy, {}});
    return m;
}

}  // namespace

CostMatrix build_discounted_costs(std::span<const geom::Point2D> sensors,
                                  std::span<const TaggedPoint> points, double rs) {
    CostMatrix m = padded_matrix(sensors, points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        m.columns[j].kind =
            points[j].target_location ? ColumnKind::kTargetLocation : ColumnKind::kIntersection;
        m.columns[j].location = points[j].location;
        for (size_t i = 0; i < sensors.size(); ++i) {
            const double zeta = geom::distance(sensors[i], points[j].location);
            m.entries[i * sensors.size() + j] =
                points[j].target_location ? std::max(0.0, zeta - rs) : zeta;
        }
    }
    return m;
}

CostMatrix build_exact_costs(std::span<const geom::Point2D> sensors,
                             std::span<const geom::Point2D> points) {
    CostMatrix m = padded_matrix(sensors, points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        m.columns[j].kind = ColumnKind::kIntersection;
        m.columns[j].location = points[j];
        for (size_t i = 0; i < sensors.size(); ++i)
            m.entries[i * sensors.size() + j] = geom::distance(sensors[i], points[j]);
    }
    return m;
}

}  // namespace mwsn::assign
