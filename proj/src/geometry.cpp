#include "mwsn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mwsn::geom {

double distance(const Point2D& a, const Point2D& b) { return std::hypot(a.x - b.x, a.y - b.y); }

int ceil_steps(double d, double step) {
    if (d <= kEps) return 0;
    if (std::isinf(step)) return 1;
    return static_cast<int>(std::ceil(d / step - kEps));
}

std::vector<Point2D> circle_pair_intersections(const Circle& c1, const Circle& c2) {
    if (std::abs(c1.radius - c2.radius) > kEps)
        throw std::invalid_argument("circle_pair_intersections: radii differ");
    const double r = c1.radius;
    const double d = distance(c1.center, c2.center);
    if (d <= kEps) throw std::invalid_argument("circle_pair_intersections: coincident centers");
    if (d > 2.0 * r + kEps) return {};

    const double ux = (c2.center.x - c1.center.x) / d;
    const double uy = (c2.center.y - c1.center.y) / d;
    const Point2D mid{c1.center.x + ux * d / 2.0, c1.center.y + uy * d / 2.0};
    if (d >= 2.0 * r - kEps) return {mid};  // tangent
    const double h = std::sqrt(std::max(0.0, r * r - d * d / 4.0));
    Point2D p1{mid.x - uy * h, mid.y + ux * h};
    Point2D p2{mid.x + uy * h, mid.y - ux * h};
    if (p2.x < p1.x || (p2.x == p1.x && p2.y < p1.y)) std::swap(p1, p2);
    return {p1, p2};
}

std::vector<int> covered_target_ids(const Point2D& p, std::span<const Point2D> targets, double rs) {
    std::vector<int> ids;
    for (size_t i = 0; i < targets.size(); ++i)
        if (distance(p, targets[i]) <= rs + kEps) ids.push_back(static_cast<int>(i));
    return ids;
}

namespace {

// Interior angle at `v` between rays toward `p` and `q`, as a cosine.
double corner_cosine(const Point2D& v, const Point2D& p, const Point2D& q) {
    const double ux = p.x - v.x, uy = p.y - v.y;
    const double wx = q.x - v.x, wy = q.y - v.y;
    const double nu = std::hypot(ux, uy), nw = std::hypot(wx, wy);
    return (ux * wx + uy * wy) / (nu * nw);
}

}  // namespace

Point2D fermat_point(const Triple& t) {
    const Point2D corners[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (distance(corners[i], corners[j]) <= kEps)
                throw std::invalid_argument("fermat_point: duplicate corners");

    // A corner whose angle reaches 120 degrees is the minimizer itself;
    // collinear triples hit this at the middle corner (angle 180).
    for (int i = 0; i < 3; ++i) {
        const double c =
            corner_cosine(corners[i], corners[(i + 1) % 3], corners[(i + 2) % 3]);
        if (c <= -0.5 + 1e-12) return corners[i];
    }

    // All angles below 120 degrees: interior minimizer. Closed form via the
    // isogonic-point trilinears csc(angle + 60deg), then a short iterative
    // polish of the geometric median.
    const double la = distance(t.b, t.c);
    const double lb = distance(t.c, t.a);
    const double lc = distance(t.a, t.b);
    const double aa = std::acos(std::clamp(corner_cosine(t.a, t.b, t.c), -1.0, 1.0));
    const double ab = std::acos(std::clamp(corner_cosine(t.b, t.c, t.a), -1.0, 1.0));
    const double ac = std::acos(std::clamp(corner_cosine(t.c, t.a, t.b), -1.0, 1.0));
    const double third = std::acos(-1.0) / 3.0;
    const double wa = la / std::sin(aa + third);
    const double wb = lb / std::sin(ab + third);
    const double wc = lc / std::sin(ac + third);
    Point2D p{(wa * t.a.x + wb * t.b.x + wc * t.c.x) / (wa + wb + wc),
              (wa * t.a.y + wb * t.b.y + wc * t.c.y) / (wa + wb + wc)};

    for (int iter = 0; iter < 200; ++iter) {
        double sx = 0.0, sy = 0.0, sw = 0.0;
        bool on_corner = false;
        for (const Point2D& c : corners) {
            const double d = distance(p, c);
            if (d < 1e-12) {
                on_corner = true;
                break;
            }
            sx += c.x / d;
            sy += c.y / d;
            sw += 1.0 / d;
        }
        if (on_corner) break;
        const Point2D next{sx / sw, sy / sw};
        const double moved = distance(p, next);
        p = next;
        if (moved < 1e-13) break;
    }
    return p;
}

namespace {

// Circumcenter of a non-collinear triple.
bool circumcenter(const Point2D& a, const Point2D& b, const Point2D& c, Point2D& out) {
    const double ux = b.x - a.x, uy = b.y - a.y;
    const double vx = c.x - a.x, vy = c.y - a.y;
    const double cross = ux * vy - uy * vx;
    const double nu = std::hypot(ux, uy), nv = std::hypot(vx, vy);
    if (nu <= kEps || nv <= kEps) return false;
    if (std::abs(cross) <= kEps * nu * nv) return false;  // collinear
    const double u2 = ux * ux + uy * uy;
    const double v2 = vx * vx + vy * vy;
    out.x = a.x + (vy * u2 - uy * v2) / (2.0 * cross);
    out.y = a.y + (ux * v2 - vx * u2) / (2.0 * cross);
    return true;
}

}  // namespace

std::vector<Triple> voronoi_neighbor_triples(std::span<const Point2D> points) {
    std::vector<Triple> out;
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Point2D center;
                if (!circumcenter(points[i], points[j], points[k], center)) continue;
                const double radius = distance(center, points[i]);
                bool empty = true;
                for (size_t q = 0; q < n && empty; ++q) {
                    if (q == i || q == j || q == k) continue;
                    if (distance(center, points[q]) < radius - kEps) empty = false;
                }
                if (empty) out.push_back({points[i], points[j], points[k]});
            }
    return out;
}

std::vector<Point2D> chain_points(const Point2D& from, const Point2D& to, double step,
                                  const ChainStop& stop) {
    if (step <= 0.0) throw std::invalid_argument("chain_points: step must be positive");
    const double d = distance(from, to);
    std::vector<Point2D> pts;
    if (d <= kEps) return pts;
    const double ux = (to.x - from.x) / d;
    const double uy = (to.y - from.y) / d;
    double cum = step;
    while (true) {
        if (cum >= d - kEps) {  // overshoot clamps to the destination
            pts.push_back(to);
            break;
        }
        pts.push_back({from.x + ux * cum, from.y + uy * cum});
        if (stop && stop(pts.back(), pts)) break;
        cum += step;
    }
    return pts;
}

}  // namespace mwsn::geom
