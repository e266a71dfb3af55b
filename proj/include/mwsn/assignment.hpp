#pragma once

#include <span>
#include <vector>

#include "mwsn/geometry.hpp"

namespace mwsn::assign {

enum class ColumnKind { kIntersection, kTargetLocation, kDummy };

struct CostColumn {
    ColumnKind kind = ColumnKind::kDummy;
    geom::Point2D location;  // meaningless for dummy columns
};

// Square cost matrix: rows are sensors, columns are destination points padded
// with all-zero dummy columns up to the sensor count.
struct CostMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major n*n
    std::vector<CostColumn> columns;

    double at(int row, int col) const { return entries[static_cast<size_t>(row) * n + col]; }
};

struct AssignmentResult {
    std::vector<int> column_of_row;
    double total_cost = 0.0;
};

// Exact minimum-cost perfect assignment (O(n^3) shortest augmenting paths).
// Entries must be non-negative and finite.
AssignmentResult hungarian(const CostMatrix& costs);

// A point a sensor may be sent to: either a circle-intersection point it must
// reach exactly, or a target location it only needs to approach within rs.
struct TaggedPoint {
    geom::Point2D location;
    bool target_location = false;
};

// Movement costs with the sensing-radius discount: reaching a target-location
// point costs max(0, dist - rs) because stopping on the sensing-disc boundary
// already covers the target; intersection points cost the full distance.
CostMatrix build_discounted_costs(std::span<const geom::Point2D> sensors,
                                  std::span<const TaggedPoint> points, double rs);

// Plain movement costs: every point must be reached exactly.
CostMatrix build_exact_costs(std::span<const geom::Point2D> sensors,
                             std::span<const geom::Point2D> points);

}  // namespace mwsn::assign
