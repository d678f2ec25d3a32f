#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "cpih/geometry.hpp"
#include "cpih/rng.hpp"

namespace cpih {

// Ordered collection of potential regions with stable agent identifiers.
struct RegionFamily {
    struct Member {
        int id;
        ConvexRegion region;
    };
    std::vector<Member> members;

    // Regions with identifiers 0..n-1.
    static RegionFamily of(std::vector<ConvexRegion> regions);

    std::size_t size() const { return members.size(); }
    const ConvexRegion& region(std::size_t i) const { return members[i].region; }
    RegionFamily subfamily(const std::vector<int>& indices) const;
    void validate() const;  // distinct ids, size >= 1
};

// One point per region; points[i] lies in regions[i].
struct PotentialConfiguration {
    PointList points;
};

// Per-step memo of triple hulls keyed by the unordered identifier triple.
// Confine one cache to one evaluation context; results are identical with or
// without it.
class TripleCache {
public:
    const ConvexPolygon* find(const std::array<int, 3>& key) const;
    void put(const std::array<int, 3>& key, ConvexPolygon poly);

private:
    std::map<std::array<int, 3>, ConvexPolygon> entries_;
};

// Largest region guaranteed inside the hull of every point selection from the
// three regions, materialized as the intersection of the three pairwise
// separating-tangent inner halfplanes clipped to the hull of the regions.
// Empty when any required tangent does not exist or the intersection is empty.
ConvexPolygon invariant_hull_triple(const ConvexRegion& a, const ConvexRegion& b,
                                    const ConvexRegion& c);

// Hull of the union of the triple hulls over all 3-member subsets. Throws
// std::invalid_argument("need at least d+1 regions") when |B| < 3.
ConvexPolygon invariant_hull(const RegionFamily& B, TripleCache* cache = nullptr);

// Over `directions` evenly spaced line orientations through p, the minimum
// count of regions fully contained in a closed halfplane, minimized over the
// two sides and all orientations. A sampled necessary condition.
int min_regions_per_halfplane(const Point& p, const RegionFamily& B, int directions);

// True iff every sampled line orientation through p leaves at least one fully
// contained region on each closed side.
bool invariant_hull_membership_check(const Point& p, const RegionFamily& Q,
                                     int directions);

// Uniform-over-area point in a region; deterministic given the rng state.
Point sample_point(const ConvexRegion& region, Rng& rng);

PotentialConfiguration sample_configuration(const RegionFamily& B, Rng& rng);
PotentialConfiguration sample_configuration(const RegionFamily& B, std::uint64_t seed);

}  // namespace cpih
