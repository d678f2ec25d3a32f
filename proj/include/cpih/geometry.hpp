#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace cpih {

using Point = Eigen::Vector2d;
using PointList = std::vector<Point>;

// Absolute tolerance for all containment / tangency comparisons.
inline constexpr double kGeomTol = 1e-9;

inline double cross_z(const Point& a, const Point& b) {
    return a.x() * b.y() - a.y() * b.x();
}

// Rotate by +90 degrees.
inline Point perp_ccw(const Point& v) { return Point(-v.y(), v.x()); }

// Closed halfplane {p : normal.dot(p) <= offset} with |normal| = 1.
// Where a tangent separates a region pair from a third region, this stored
// halfplane is the inner side (third region) and its closed complement the
// outer side (the pair).
struct Halfplane {
    Point normal{1.0, 0.0};
    double offset = 0.0;

    // Normalizes the given direction; throws on a zero normal.
    static Halfplane from_normal(const Point& n, double offset);
    // Halfplane whose boundary passes through p with the given unit normal.
    static Halfplane through(const Point& p, const Point& unit_normal);

    double signed_excess(const Point& p) const { return normal.dot(p) - offset; }
    bool contains(const Point& p, double tol = kGeomTol) const {
        return signed_excess(p) <= tol;
    }
    Halfplane flipped() const { return Halfplane{-normal, -offset}; }
};

// Convex polygon as a CCW vertex list in canonical form: vertices within
// kGeomTol merged, collinear chain vertices removed, rotation starts at the
// lexicographically smallest vertex. Empty, single-point, and segment
// polygons are first-class values.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    const PointList& vertices() const { return verts_; }
    bool empty() const { return verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    bool is_point() const { return verts_.size() == 1; }
    bool is_segment() const { return verts_.size() == 2; }

    double area() const;
    // Area centroid; midpoint for a segment, the vertex for a point.
    Point centroid() const;
    bool contains(const Point& p, double tol = kGeomTol) const;

    // Internal: wraps an already canonical CCW vertex list.
    static ConvexPolygon unchecked(PointList ccw_vertices);

private:
    PointList verts_;
};

// Convex hull with duplicate and collinear vertices removed. Degenerate
// inputs yield point/segment polygons. Throws std::invalid_argument
// ("empty point set") on empty input.
ConvexPolygon convex_hull(const PointList& points);

// poly intersected with a closed halfplane; may be empty.
ConvexPolygon clip(const ConvexPolygon& poly, const Halfplane& h);

// Convex intersection of two polygons; empty if disjoint.
ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b);

// Distance from p to the polygon (0 when inside); +inf for the empty polygon.
double distance_to(const ConvexPolygon& poly, const Point& p);

// Hausdorff distance between two non-empty convex polygons.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

double symmetric_difference_area(const ConvexPolygon& a, const ConvexPolygon& b);

enum class RegionShape { point, square, disk, polygon };

// A bounded closed convex region: a point, an axis-aligned square, a disk,
// or a convex polygon. Square and disk sizes are strictly positive; a
// zero-size region is expressed as a point.
class ConvexRegion {
public:
    static ConvexRegion point(const Point& at);
    static ConvexRegion square(const Point& center, double half_width);
    static ConvexRegion disk(const Point& center, double radius);
    static ConvexRegion polygon(ConvexPolygon poly);

    RegionShape shape() const { return shape_; }
    const Point& center() const { return center_; }
    double half_width() const { return size_; }
    double radius() const { return size_; }
    const ConvexPolygon& poly() const { return poly_; }

    // Points generating an outer bound of the region: square/polygon
    // vertices, the point itself, or a circumscribed polygon for disks.
    PointList boundary_points() const;

private:
    RegionShape shape_ = RegionShape::point;
    Point center_{0.0, 0.0};
    double size_ = 0.0;
    ConvexPolygon poly_;
};

// max over the region of direction.dot(p). The region lies in
// {dot(n,p) <= c} iff support(region, n) <= c.
double support(const ConvexRegion& region, const Point& direction);

bool region_in_halfplane(const ConvexRegion& region, const Halfplane& h,
                         double tol = kGeomTol);

// Line tangent to both f1 and f2 with the pair in the closed outer halfplane
// and `other` contained in the returned closed inner halfplane; nullopt when
// no such tangent exists.
std::optional<Halfplane> separating_tangent(const ConvexRegion& f1,
                                            const ConvexRegion& f2,
                                            const ConvexRegion& other);

}  // namespace cpih
