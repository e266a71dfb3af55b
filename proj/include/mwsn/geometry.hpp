#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mwsn::geom {

// Global tolerance for geometric comparisons, in field units.
inline constexpr double kEps = 1e-9;

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point2D& a, const Point2D& b) { return a.x == b.x && a.y == b.y; }

struct Circle {
    Point2D center;
    double radius = 0.0;
};

struct Triple {
    Point2D a;
    Point2D b;
    Point2D c;
};

double distance(const Point2D& a, const Point2D& b);

// True ceiling of d/step with an epsilon guard so exact multiples do not
// round up; d <= eps yields 0 and an infinite step yields at most 1.
int ceil_steps(double d, double step);

// Intersection points of two equal-radius circles, ordered lexicographically
// by (x, y). Empty when the circles are too far apart; a single midpoint at
// tangency. Coincident centers are degenerate and rejected.
std::vector<Point2D> circle_pair_intersections(const Circle& c1, const Circle& c2);

// Indices (ascending) of targets within rs + eps of p.
std::vector<int> covered_target_ids(const Point2D& p, std::span<const Point2D> targets, double rs);

// Point minimizing the total distance to the triple's corners. A corner with
// an interior angle of 120 degrees or more (collinear triples included) is
// itself the minimizer. Corners must be pairwise distinct.
Point2D fermat_point(const Triple& t);

// Every unordered triple of input points that is mutually adjacent in the
// Voronoi diagram, found via the empty-circumcircle test: a triple qualifies
// iff no other input point lies strictly inside its circumcircle. Points on
// the circumcircle do not disqualify; collinear triples never qualify.
std::vector<Triple> voronoi_neighbor_triples(std::span<const Point2D> points);

// Stop predicate for chain_points, evaluated after each emission; `last` is
// the point just emitted and `emitted` all points so far.
using ChainStop = std::function<bool(const Point2D& last, std::span<const Point2D> emitted)>;

// Points along the segment from `from` (never included) toward `to` at
// cumulative distances step, 2*step, ...; a step that would overshoot is
// clamped to `to`, which always ends the chain. The stop rule, when given,
// is evaluated after each emission and ends the chain early when true.
// An infinite step emits a single point at the destination. from == to
// (within eps) yields an empty chain.
std::vector<Point2D> chain_points(const Point2D& from, const Point2D& to, double step,
                                  const ChainStop& stop = nullptr);

}  // namespace mwsn::geom
