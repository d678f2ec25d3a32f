#include "cpih/invariant_hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpih {

RegionFamily RegionFamily::of(std::vector<ConvexRegion> regions) {
    RegionFamily fam;
    fam.members.reserve(regions.size());
    int id = 0;
    for (ConvexRegion& r : regions) fam.members.push_back({id++, std::move(r)});
    return fam;
}

RegionFamily RegionFamily::subfamily(const std::vector<int>& indices) const {
    RegionFamily fam;
    fam.members.reserve(indices.size());
    for (int i : indices) fam.members.push_back(members.at(i));
    return fam;
}

void RegionFamily::validate() const {
    if (members.empty()) throw std::invalid_argument("region family must be non-empty");
    std::vector<int> ids;
    ids.reserve(members.size());
    for (const Member& m : members) ids.push_back(m.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("region family ids must be distinct");
}

const ConvexPolygon* TripleCache::find(const std::array<int, 3>& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void TripleCache::put(const std::array<int, 3>& key, ConvexPolygon poly) {
    entries_.emplace(key, std::move(poly));
}

ConvexPolygon invariant_hull_triple(const ConvexRegion& a, const ConvexRegion& b,
                                    const ConvexRegion& c) {
    // A missing tangent means no point can keep a full region on each side of
    // every line, so the hull is empty.
    const auto hab = separating_tangent(a, b, c);
    if (!hab) return {};
    const auto hac = separating_tangent(a, c, b);
    if (!hac) return {};
    const auto hbc = separating_tangent(b, c, a);
    if (!hbc) return {};

    PointList bound;
    for (const ConvexRegion* r : {&a, &b, &c}) {
        const PointList pts = r->boundary_points();
        bound.insert(bound.end(), pts.begin(), pts.end());
    }
    ConvexPolygon region = convex_hull(bound);
    for (const Halfplane& h : {*hab, *hac, *hbc}) {
        region = clip(region, h);
        if (region.empty()) break;
    }
    return region;
}

ConvexPolygon invariant_hull(const RegionFamily& B, TripleCache* cache) {
    if (B.size() < 3) throw std::invalid_argument("need at least d+1 regions");
    const std::size_t n = B.size();
    PointList verts;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                std::array<int, 3> key{B.members[i].id, B.members[j].id,
                                       B.members[k].id};
                std::sort(key.begin(), key.end());
                const ConvexPolygon* triple = cache ? cache->find(key) : nullptr;
                ConvexPolygon computed;
                if (!triple) {
                    computed = invariant_hull_triple(B.region(i), B.region(j),
                                                     B.region(k));
                    triple = &computed;
                }
                verts.insert(verts.end(), triple->vertices().begin(),
                             triple->vertices().end());
                if (cache && !cache->find(key)) cache->put(key, std::move(computed));
            }
        }
    }
    if (verts.empty()) return {};
    return convex_hull(verts);
}

int min_regions_per_halfplane(const Point& p, const RegionFamily& B, int directions) {
    int overall = static_cast<int>(B.size());
    for (int j = 0; j < directions; ++j) {
        const double theta = M_PI * j / directions;
        const Point n(std::cos(theta), std::sin(theta));
        const double c = n.dot(p);
        int pos = 0;
        int neg = 0;
        for (const RegionFamily::Member& m : B.members) {
            if (support(m.region, n) <= c + kGeomTol) ++pos;
            if (support(m.region, -n) <= -c + kGeomTol) ++neg;
        }
        overall = std::min(overall, std::min(pos, neg));
        if (overall == 0) return 0;
    }
    return overall;
}

bool invariant_hull_membership_check(const Point& p, const RegionFamily& Q,
                                     int directions) {
    return min_regions_per_halfplane(p, Q, directions) >= 1;
}

Point sample_point(const ConvexRegion& region, Rng& rng) {
    switch (region.shape()) {
        case RegionShape::point:
            return region.center();
        case RegionShape::square: {
            const double hw = region.half_width();
            const double x = rng.uniform(-hw, hw);
            const double y = rng.uniform(-hw, hw);
            return region.center() + Point(x, y);
        }
        case RegionShape::disk: {
            const double r = region.radius() * std::sqrt(rng.uniform());
            const double a = rng.uniform(0.0, 2.0 * M_PI);
            return region.center() + r * Point(std::cos(a), std::sin(a));
        }
        case RegionShape::polygon: {
            const PointList& v = region.poly().vertices();
            if (v.size() == 1) return v[0];
            if (v.size() == 2) {
                const double t = rng.uniform();
                return v[0] + t * (v[1] - v[0]);
            }
            // area-weighted fan triangle, then uniform in the triangle
            std::vector<double> cum(v.size() - 2);
            double total = 0.0;
            for (std::size_t i = 1; i + 1 < v.size(); ++i) {
                total += 0.5 * std::abs(cross_z(v[i] - v[0], v[i + 1] - v[0]));
                cum[i - 1] = total;
            }
            const double pick = rng.uniform() * total;
            std::size_t tri = 1;
            for (std::size_t i = 0; i < cum.size(); ++i) {
                if (pick <= cum[i]) {
                    tri = i + 1;
                    break;
                }
                tri = i + 1;
            }
            double s = rng.uniform();
            double t = rng.uniform();
            if (s + t > 1.0) {
                s = 1.0 - s;
                t = 1.0 - t;
            }
            return v[0] + s * (v[tri] - v[0]) + t * (v[tri + 1] - v[0]);
        }
    }
    return region.center();
}

PotentialConfiguration sample_configuration(const RegionFamily& B, Rng& rng) {
    PotentialConfiguration cfg;
    cfg.points.reserve(B.size());
    for (const RegionFamily::Member& m : B.members)
        cfg.points.push_back(sample_point(m.region, rng));
    return cfg;
}

PotentialConfiguration sample_configuration(const RegionFamily& B,
                                            std::uint64_t seed) {
    Rng rng(seed);
    return sample_configuration(B, rng);
}

}  // namespace cpih
