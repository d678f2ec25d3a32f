#include "cpih/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cpih {

namespace {

bool lex_less(const Point& a, const Point& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
}

bool near(const Point& a, const Point& b, double tol = kGeomTol) {
    return (a - b).norm() <= tol;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const Point d = b - a;
    const double len2 = d.squaredNorm();
    if (len2 <= 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
    return (p - (a + t * d)).norm();
}

// Merge near-duplicates and collinear chain vertices of a CCW ring, then
// rotate so the lexicographically smallest vertex comes first.
PointList canonicalize_ring(PointList ring) {
    // adjacent merges, wrapping
    bool changed = true;
    while (changed && ring.size() > 1) {
        changed = false;
        PointList out;
        out.reserve(ring.size());
        for (const Point& p : ring) {
            if (!out.empty() && near(out.back(), p)) {
                changed = true;
                continue;
            }
            out.push_back(p);
        }
        if (out.size() > 1 && near(out.front(), out.back())) {
            out.pop_back();
            changed = true;
        }
        ring.swap(out);
    }
    // drop vertices within tolerance of the line through their neighbours
    changed = true;
    while (changed && ring.size() >= 3) {
        changed = false;
        PointList out;
        out.reserve(ring.size());
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = ring[(i + n - 1) % n];
            const Point& cur = ring[i];
            const Point& next = ring[(i + 1) % n];
            const Point base = next - prev;
            const double len = base.norm();
            // a proper CCW vertex sticks out right of the prev->next chord
            if (len > 0.0 && cross_z(base, cur - prev) >= -kGeomTol * len) {
                changed = true;
                continue;
            }
            out.push_back(cur);
        }
        ring.swap(out);
    }
    if (ring.size() == 2 && lex_less(ring[1], ring[0])) std::swap(ring[0], ring[1]);
    if (ring.size() >= 3) {
        auto it = std::min_element(ring.begin(), ring.end(), lex_less);
        std::rotate(ring.begin(), it, ring.end());
    }
    return ring;
}

// parametric clip of segment a-b against halfplanes; exact endpoints are kept
ConvexPolygon clip_segment(const Point& a, const Point& b,
                           const std::vector<Halfplane>& constraints) {
    double t0 = 0.0;
    double t1 = 1.0;
    const Point d = b - a;
    for (const Halfplane& h : constraints) {
        const double fa = h.signed_excess(a + t0 * d);
        const double fb = h.signed_excess(a + t1 * d);
        if (fa <= kGeomTol && fb <= kGeomTol) continue;
        if (fa > kGeomTol && fb > kGeomTol) return {};
        // one side out: cut at the zero crossing of the full segment
        const double f0 = h.signed_excess(a);
        const double f1 = h.signed_excess(b);
        const double denom = f0 - f1;
        if (std::abs(denom) < 1e-300) return {};
        const double tc = f0 / denom;
        if (fa > kGeomTol) {
            t0 = std::max(t0, tc);
        } else {
            t1 = std::min(t1, tc);
        }
        if (t0 > t1) return {};
    }
    const Point pa = (t0 == 0.0) ? a : Point(a + t0 * d);
    const Point pb = (t1 == 1.0) ? b : Point(a + t1 * d);
    if (near(pa, pb)) return ConvexPolygon::unchecked({pa});
    PointList seg{pa, pb};
    if (lex_less(seg[1], seg[0])) std::swap(seg[0], seg[1]);
    return ConvexPolygon::unchecked(std::move(seg));
}

std::vector<Halfplane> edge_halfplanes(const ConvexPolygon& poly) {
    std::vector<Halfplane> hs;
    const PointList& v = poly.vertices();
    if (v.size() >= 3) {
        hs.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& u = v[i];
            const Point e = v[(i + 1) % v.size()] - u;
            const Point n = Point(e.y(), -e.x()).normalized();
            hs.push_back(Halfplane{n, n.dot(u)});
        }
    } else if (v.size() == 2) {
        const Point dhat = (v[1] - v[0]).normalized();
        const Point n = perp_ccw(dhat);
        hs.push_back(Halfplane{n, n.dot(v[0])});
        hs.push_back(Halfplane{-n, -n.dot(v[0])});
        hs.push_back(Halfplane{-dhat, -dhat.dot(v[0])});
        hs.push_back(Halfplane{dhat, dhat.dot(v[1])});
    }
    return hs;
}

}  // namespace

Halfplane Halfplane::from_normal(const Point& n, double offset) {
    const double len = n.norm();
    if (len < 1e-12) throw std::invalid_argument("halfplane normal must be nonzero");
    return Halfplane{n / len, offset / len};
}

Halfplane Halfplane::through(const Point& p, const Point& unit_normal) {
    return Halfplane{unit_normal, unit_normal.dot(p)};
}

ConvexPolygon ConvexPolygon::unchecked(PointList ccw_vertices) {
    ConvexPolygon poly;
    poly.verts_ = std::move(ccw_vertices);
    return poly;
}

double ConvexPolygon::area() const {
    if (verts_.size() < 3) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point& p = verts_[i];
        const Point& q = verts_[(i + 1) % verts_.size()];
        a += cross_z(p, q);
    }
    return 0.5 * a;
}

Point ConvexPolygon::centroid() const {
    if (verts_.empty()) throw std::logic_error("centroid of empty polygon");
    if (verts_.size() == 1) return verts_[0];
    if (verts_.size() == 2) return 0.5 * (verts_[0] + verts_[1]);
    const double a = area();
    if (a < 1e-300) {
        Point mean = Point::Zero();
        for (const Point& v : verts_) mean += v;
        return mean / static_cast<double>(verts_.size());
    }
    Point c = Point::Zero();
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point& p = verts_[i];
        const Point& q = verts_[(i + 1) % verts_.size()];
        c += (p + q) * cross_z(p, q);
    }
    return c / (6.0 * a);
}

bool ConvexPolygon::contains(const Point& p, double tol) const {
    if (verts_.empty()) return false;
    if (verts_.size() <= 2) return distance_to(*this, p) <= tol;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point& u = verts_[i];
        const Point e = verts_[(i + 1) % verts_.size()] - u;
        if (cross_z(e, p - u) < -tol * e.norm()) return false;
    }
    return true;
}

ConvexPolygon convex_hull(const PointList& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const Point& p : points) {
        if (!p.allFinite()) throw std::invalid_argument("non-finite point");
    }
    PointList pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    PointList uniq;
    uniq.reserve(pts.size());
    for (const Point& p : pts) {
        if (uniq.empty() || !near(uniq.back(), p)) uniq.push_back(p);
    }
    if (uniq.size() == 1) return ConvexPolygon::unchecked(std::move(uniq));

    auto build = [&](bool lower) {
        PointList chain;
        auto turn_ok = [&](const Point& o, const Point& a, const Point& b) {
            const Point base = b - o;
            return cross_z(a - o, base) > kGeomTol * base.norm();
        };
        auto scan = [&](const Point& p) {
            while (chain.size() >= 2 &&
                   !turn_ok(chain[chain.size() - 2], chain[chain.size() - 1], p)) {
                chain.pop_back();
            }
            chain.push_back(p);
        };
        if (lower) {
            for (const Point& p : uniq) scan(p);
        } else {
            for (auto it = uniq.rbegin(); it != uniq.rend(); ++it) scan(*it);
        }
        return chain;
    };
    PointList lower = build(true);
    PointList upper = build(false);
    PointList ring = std::move(lower);
    ring.pop_back();
    ring.insert(ring.end(), upper.begin(), upper.end() - 1);
    return ConvexPolygon::unchecked(canonicalize_ring(std::move(ring)));
}

ConvexPolygon clip(const ConvexPolygon& poly, const Halfplane& h) {
    const PointList& v = poly.vertices();
    if (v.empty()) return {};
    if (v.size() == 1) return h.contains(v[0]) ? poly : ConvexPolygon{};
    if (v.size() == 2) return clip_segment(v[0], v[1], {h});
    PointList out;
    out.reserve(v.size() + 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& s = v[i];
        const Point& e = v[(i + 1) % v.size()];
        const double fs = h.signed_excess(s);
        const double fe = h.signed_excess(e);
        const bool ins = fs <= kGeomTol;
        const bool ine = fe <= kGeomTol;
        if (ins) out.push_back(s);
        if (ins != ine) {
            // clamp: with tolerance-based sides the raw ratio can leave [0,1]
            // and extrapolate past the segment
            const double denom = fs - fe;
            const double t =
                (std::abs(denom) < 1e-300) ? 0.0 : std::clamp(fs / denom, 0.0, 1.0);
            out.push_back(s + t * (e - s));
        }
    }
    if (out.empty()) return {};
    return convex_hull(out);
}

ConvexPolygon intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.empty() || b.empty()) return {};
    if (a.is_point()) return b.contains(a.vertices()[0]) ? a : ConvexPolygon{};
    if (b.is_point()) return a.contains(b.vertices()[0]) ? b : ConvexPolygon{};
    if (a.is_segment())
        return clip_segment(a.vertices()[0], a.vertices()[1], edge_halfplanes(b));
    if (b.is_segment())
        return clip_segment(b.vertices()[0], b.vertices()[1], edge_halfplanes(a));
    ConvexPolygon r = a;
    for (const Halfplane& h : edge_halfplanes(b)) {
        r = clip(r, h);
        if (r.empty()) break;
    }
    return r;
}

double distance_to(const ConvexPolygon& poly, const Point& p) {
    const PointList& v = poly.vertices();
    if (v.empty()) return std::numeric_limits<double>::infinity();
    if (v.size() == 1) return (p - v[0]).norm();
    if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& u = v[i];
        const Point& w = v[(i + 1) % v.size()];
        if (cross_z(w - u, p - u) < 0.0) inside = false;
        best = std::min(best, point_segment_distance(p, u, w));
    }
    return inside ? 0.0 : best;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    double h = 0.0;
    for (const Point& p : a.vertices()) h = std::max(h, distance_to(b, p));
    for (const Point& p : b.vertices()) h = std::max(h, distance_to(a, p));
    return h;
}

double symmetric_difference_area(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.area() + b.area() - 2.0 * intersect(a, b).area();
}

ConvexRegion ConvexRegion::point(const Point& at) {
    ConvexRegion r;
    r.shape_ = RegionShape::point;
    r.center_ = at;
    return r;
}

ConvexRegion ConvexRegion::square(const Point& center, double half_width) {
    if (!(half_width > 0.0))
        throw std::invalid_argument("square half_width must be positive");
    ConvexRegion r;
    r.shape_ = RegionShape::square;
    r.center_ = center;
    r.size_ = half_width;
    return r;
}

ConvexRegion ConvexRegion::disk(const Point& center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
    ConvexRegion r;
    r.shape_ = RegionShape::disk;
    r.center_ = center;
    r.size_ = radius;
    return r;
}

ConvexRegion ConvexRegion::polygon(ConvexPolygon poly) {
    if (poly.empty()) throw std::invalid_argument("polygon region must be non-empty");
    ConvexRegion r;
    r.shape_ = RegionShape::polygon;
    r.center_ = poly.centroid();
    r.poly_ = std::move(poly);
    return r;
}

PointList ConvexRegion::boundary_points() const {
    switch (shape_) {
        case RegionShape::point:
            return {center_};
        case RegionShape::square:
            return {center_ + Point(size_, size_), center_ + Point(-size_, size_),
                    center_ + Point(-size_, -size_), center_ + Point(size_, -size_)};
        case RegionShape::polygon:
            return poly_.vertices();
        case RegionShape::disk: {
            // circumscribed polygon: an outer bound, never cuts the disk
            constexpr int kSides = 360;
            const double rad = size_ / std::cos(M_PI / kSides);
            PointList pts;
            pts.reserve(kSides);
            for (int i = 0; i < kSides; ++i) {
                const double a = 2.0 * M_PI * i / kSides;
                pts.push_back(center_ + rad * Point(std::cos(a), std::sin(a)));
            }
            return pts;
        }
    }
    return {};
}

double support(const ConvexRegion& region, const Point& direction) {
    switch (region.shape()) {
        case RegionShape::point:
            return direction.dot(region.center());
        case RegionShape::square:
            return direction.dot(region.center()) +
                   region.half_width() *
                       (std::abs(direction.x()) + std::abs(direction.y()));
        case RegionShape::disk:
            return direction.dot(region.center()) + region.radius() * direction.norm();
        case RegionShape::polygon: {
            double best = -std::numeric_limits<double>::infinity();
            for (const Point& v : region.poly().vertices())
                best = std::max(best, direction.dot(v));
            return best;
        }
    }
    return 0.0;
}

bool region_in_halfplane(const ConvexRegion& region, const Halfplane& h, double tol) {
    return support(region, h.normal) <= h.offset + tol;
}

namespace {

struct Line {
    Point n;   // unit normal
    double c;  // line {x : n.dot(x) = c}
};

void add_line_through(std::vector<Line>& lines, const Point& a, const Point& b) {
    const Point d = b - a;
    const double len = d.norm();
    if (len < 1e-12) return;
    const Point n = perp_ccw(d) / len;
    lines.push_back({n, n.dot(a)});
}

// Tangent lines through an external point v to the circle (q, r), oriented
// with the circle on the {n.dot(x) >= c} side.
void add_point_disk_tangents(std::vector<Line>& lines, const Point& v,
                             const Point& q, double r) {
    const Point d = q - v;
    const double dist = d.norm();
    if (dist < 1e-12 || dist + 1e-12 < r) return;
    const double s = std::clamp(r / dist, -1.0, 1.0);
    const double t = std::sqrt(std::max(0.0, 1.0 - s * s));
    const Point dhat = d / dist;
    const Point dperp = perp_ccw(dhat);
    lines.push_back({s * dhat + t * dperp, (s * dhat + t * dperp).dot(v)});
    lines.push_back({s * dhat - t * dperp, (s * dhat - t * dperp).dot(v)});
}

std::vector<Line> tangent_candidates(const ConvexRegion& f1, const ConvexRegion& f2,
                                     const ConvexRegion& other) {
    std::vector<Line> lines;
    const bool disk1 = f1.shape() == RegionShape::disk;
    const bool disk2 = f2.shape() == RegionShape::disk;
    if (!disk1 && !disk2) {
        const PointList g1 = f1.boundary_points();
        const PointList g2 = f2.boundary_points();
        lines.reserve(g1.size() * g2.size());
        for (const Point& a : g1)
            for (const Point& b : g2) add_line_through(lines, a, b);
        if (lines.empty() && f1.shape() == RegionShape::point &&
            f2.shape() == RegionShape::point) {
            // coincident point pair: supporting line facing away from `other`
            const Point d = f1.center() - other.center();
            if (d.norm() > 1e-12) {
                const Point n = d.normalized();
                lines.push_back({n, n.dot(f1.center())});
            }
        }
    } else if (disk1 != disk2) {
        const ConvexRegion& d = disk1 ? f1 : f2;
        const ConvexRegion& g = disk1 ? f2 : f1;
        for (const Point& v : g.boundary_points())
            add_point_disk_tangents(lines, v, d.center(), d.radius());
    } else {
        const Point u = f1.center() - f2.center();
        const double len = u.norm();
        const double rho = f1.radius() - f2.radius();
        if (len < 1e-12) {
            if (std::abs(rho) < 1e-12) {
                const Point d = f1.center() - other.center();
                if (d.norm() > 1e-12) {
                    const Point n = d.normalized();
                    lines.push_back({n, n.dot(f1.center()) - f1.radius()});
                }
            }
        } else if (std::abs(rho) <= len * (1.0 + 1e-12)) {
            const double s = std::clamp(rho / len, -1.0, 1.0);
            const double t = std::sqrt(std::max(0.0, 1.0 - s * s));
            const Point uhat = u / len;
            const Point uperp = perp_ccw(uhat);
            for (const double sign : {1.0, -1.0}) {
                const Point n = s * uhat + sign * t * uperp;
                lines.push_back({n, n.dot(f1.center()) - f1.radius()});
            }
        }
    }
    return lines;
}

}  // namespace

std::optional<Halfplane> separating_tangent(const ConvexRegion& f1,
                                            const ConvexRegion& f2,
                                            const ConvexRegion& other) {
    // Candidates all touch both members, so the support inequalities below
    // double as the tangency equalities.
    for (const Line& ln : tangent_candidates(f1, f2, other)) {
        for (const double s : {1.0, -1.0}) {
            const Point n = s * ln.n;
            const double c = s * ln.c;
            if (support(f1, -n) > -c + kGeomTol) continue;
            if (support(f2, -n) > -c + kGeomTol) continue;
            if (support(other, n) > c + kGeomTol) continue;
            return Halfplane{n, c};
        }
    }
    return std::nullopt;
}

}  // namespace cpih
