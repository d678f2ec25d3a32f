#pragma once

#include <cstdint>
#include <string>

#include "cpih/invariant_hull.hpp"

namespace cpih {

struct OracleReport {
    std::string target;
    long samples = 0;
    double hausdorff = 0.0;
    long containment_violations = 0;
};

// Intersection of the hulls of `samples` sampled potential configurations.
// A superset of the invariant hull that shrinks as samples grow; with a fixed
// seed, results are monotone non-increasing in the sample count.
ConvexPolygon mc_invariant_hull(const RegionFamily& B, long samples,
                                std::uint64_t seed);

// Classical centerpoint region by exhaustive direction enumeration over point
// pairs (with small angular perturbations). 3 <= |S| <= 9.
ConvexPolygon brute_centerpoint_region(const PointList& S);

// Compares invariant_hull(B) against the Monte-Carlo reference.
OracleReport audit_invariant_hull(const RegionFamily& B, long samples,
                                  std::uint64_t seed, std::string target);

}  // namespace cpih
