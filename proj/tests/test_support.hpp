#pragma once

#include <cmath>

#include "cpih/invariant_hull.hpp"
#include "cpih/rng.hpp"

namespace cpih::testutil {

inline bool points_near(const Point& a, const Point& b, double tol) {
    return (a - b).norm() <= tol;
}

// Unordered vertex-set comparison within a tolerance.
inline bool vertex_sets_match(const ConvexPolygon& poly, const PointList& expected,
                              double tol) {
    if (poly.size() != expected.size()) return false;
    std::vector<bool> used(expected.size(), false);
    for (const Point& v : poly.vertices()) {
        bool found = false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!used[i] && points_near(v, expected[i], tol)) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

inline ConvexPolygon box_polygon(double x0, double y0, double x1, double y1) {
    return convex_hull({Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)});
}

inline ConvexRegion random_sized_region(Rng& rng, const Point& center,
                                        double min_size, double max_size) {
    const double size = rng.uniform(min_size, max_size);
    if (rng.uniform() < 0.5) return ConvexRegion::square(center, size);
    return ConvexRegion::disk(center, size);
}

// Well-spread centers: random directions on a ring of the given radius with
// jitter, re-drawn until pairwise distances stay above half the radius.
inline PointList spread_centers(Rng& rng, int n, double radius) {
    while (true) {
        PointList centers;
        for (int i = 0; i < n; ++i) {
            const double angle = 2.0 * M_PI * (i + rng.uniform(-0.25, 0.25)) / n;
            const double r = radius * rng.uniform(0.7, 1.3);
            centers.emplace_back(r * std::cos(angle), r * std::sin(angle));
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((centers[i] - centers[j]).norm() < 0.5 * radius) {
                    ok = false;
                    break;
                }
        if (ok) return centers;
    }
}

// n square/disk regions, centers spread around a ring of the given radius.
inline RegionFamily random_family(Rng& rng, int n, double radius,
                                  double min_size = 0.2, double max_size = 0.5) {
    std::vector<ConvexRegion> regions;
    for (const Point& c : spread_centers(rng, n, radius))
        regions.push_back(random_sized_region(rng, c, min_size, max_size));
    return RegionFamily::of(std::move(regions));
}

inline RegionFamily point_family(const PointList& pts) {
    std::vector<ConvexRegion> regions;
    for (const Point& p : pts) regions.push_back(ConvexRegion::point(p));
    return RegionFamily::of(std::move(regions));
}

inline PointList random_points(Rng& rng, int n, double lo, double hi) {
    PointList pts;
    for (int i = 0; i < n; ++i)
        pts.emplace_back(rng.uniform(lo, hi), rng.uniform(lo, hi));
    return pts;
}

}  // namespace cpih::testutil
