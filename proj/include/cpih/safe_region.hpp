#pragma once

#include <optional>

#include "cpih/invariant_hull.hpp"

namespace cpih {

struct SafeRegionResult {
    ConvexPolygon region;        // possibly empty
    int k = 0;                   // subset size used
    long subsets_evaluated = 0;
};

// floor(d*N/(d+1)) + 1. Throws std::invalid_argument("neighborhood too small")
// when N < d + 1.
int cpih_subset_size(int neighborhood_size, int dimension = 2);

// Intersection of the invariant hulls of all k-subsets of B, with
// k = cpih_subset_size(|B|). Emptiness is a normal outcome (the hold case).
// Exact enumeration only: families larger than 15 are refused.
SafeRegionResult cpih_region(const RegionFamily& B);

// Area centroid of the region; nullopt when empty.
std::optional<Point> select_safe_point(const SafeRegionResult& r);

// Minimum number of points of S in a closed halfplane through p, over
// `directions` sampled line orientations and both sides.
int min_points_per_halfplane(const Point& p, const PointList& S, int directions);

// Sampled check that every closed halfplane through p holds at least
// |S|/(d+1) points of S (d = 2).
bool centerpoint_check(const Point& p, const PointList& S, int directions);

}  // namespace cpih
