#include "cpih/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpih {

ConvexPolygon mc_invariant_hull(const RegionFamily& B, long samples,
                                std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    Rng rng(seed);
    ConvexPolygon region;
    for (long s = 0; s < samples; ++s) {
        const PotentialConfiguration cfg = sample_configuration(B, rng);
        const ConvexPolygon hull = convex_hull(cfg.points);
        region = (s == 0) ? hull : intersect(region, hull);
        if (region.empty()) break;
    }
    return region;
}

ConvexPolygon brute_centerpoint_region(const PointList& S) {
    if (S.size() < 3 || S.size() > 9)
        throw std::invalid_argument("brute centerpoint needs 3..9 points");
    const int n = static_cast<int>(S.size());
    ConvexPolygon region = convex_hull(S);

    // The binding-point identity of the threshold projection changes only at
    // directions perpendicular to point pairs. With those criticals included
    // exactly (plus small angular perturbations) and a uniform fan keeping
    // every direction gap well under pi, the finite intersection equals the
    // full one: between neighbouring directions the cuts pass through one
    // common point. Every sampled direction is a valid outer constraint.
    constexpr double kAngleEps = 1e-6;
    constexpr int kFan = 720;
    std::vector<double> angles;
    angles.reserve(6 * n * n + kFan);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Point d = S[j] - S[i];
            if (d.norm() < 1e-12) continue;
            const double base = std::atan2(d.y(), d.x()) + M_PI / 2.0;
            for (const double da : {-kAngleEps, 0.0, kAngleEps})
                angles.push_back(base + da);
        }
    }
    for (int f = 0; f < kFan; ++f) angles.push_back(2.0 * M_PI * f / kFan);

    const int need = (n + 2) / 3;  // ceil(N/3)
    std::vector<double> proj(S.size());
    for (const double a : angles) {
        if (region.empty()) break;
        const Point nrm(std::cos(a), std::sin(a));
        for (std::size_t m = 0; m < S.size(); ++m) proj[m] = nrm.dot(S[m]);
        std::sort(proj.begin(), proj.end(), std::greater<double>());
        // closed halfspace {nrm.dot(x) >= nrm.dot(p)} must keep at least
        // N/(d+1) points: nrm.dot(p) <= threshold-th largest projection
        region = clip(region, Halfplane{nrm, proj[need - 1]});
    }
    return region;
}

OracleReport audit_invariant_hull(const RegionFamily& B, long samples,
                                  std::uint64_t seed, std::string target) {
    OracleReport report;
    report.target = std::move(target);
    report.samples = samples;
    const ConvexPolygon exact = invariant_hull(B);
    const ConvexPolygon mc = mc_invariant_hull(B, samples, seed);
    if (exact.empty() && mc.empty()) {
        report.hausdorff = 0.0;
        return report;
    }
    report.hausdorff = hausdorff_distance(exact, mc);
    for (const Point& v : exact.vertices())
        if (distance_to(mc, v) > 1e-7) ++report.containment_violations;
    return report;
}

}  // namespace cpih
