#include "cpih/safe_region.hpp"

#include <cmath>
#include <stdexcept>

namespace cpih {

namespace {
constexpr int kMaxExactFamily = 15;
}

int cpih_subset_size(int neighborhood_size, int dimension) {
    if (neighborhood_size < dimension + 1)
        throw std::invalid_argument("neighborhood too small");
    return (dimension * neighborhood_size) / (dimension + 1) + 1;
}

SafeRegionResult cpih_region(const RegionFamily& B) {
    const int n = static_cast<int>(B.size());
    const int k = cpih_subset_size(n);
    if (n > kMaxExactFamily)
        throw std::invalid_argument(
            "family too large for exact subset enumeration (max 15)");

    TripleCache cache;
    SafeRegionResult result;
    result.k = k;

    // lexicographic k-subset enumeration keeps the intersection order stable
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool first = true;
    while (true) {
        const ConvexPolygon hull = invariant_hull(B.subfamily(idx), &cache);
        result.region = first ? hull : intersect(result.region, hull);
        first = false;
        ++result.subsets_evaluated;

        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return result;
}

std::optional<Point> select_safe_point(const SafeRegionResult& r) {
    if (r.region.empty()) return std::nullopt;
    return r.region.centroid();
}

int min_points_per_halfplane(const Point& p, const PointList& S, int directions) {
    int overall = static_cast<int>(S.size());
    for (int j = 0; j < directions; ++j) {
        const double theta = M_PI * j / directions;
        const Point n(std::cos(theta), std::sin(theta));
        const double c = n.dot(p);
        int pos = 0;
        int neg = 0;
        for (const Point& s : S) {
            const double v = n.dot(s);
            if (v <= c + kGeomTol) ++pos;
            if (v >= c - kGeomTol) ++neg;
        }
        overall = std::min(overall, std::min(pos, neg));
        if (overall == 0) return 0;
    }
    return overall;
}

bool centerpoint_check(const Point& p, const PointList& S, int directions) {
    if (S.size() < 3) throw std::invalid_argument("need at least 3 points");
    const int n = static_cast<int>(S.size());
    // "at least N/(d+1) points" with integer counts: count * (d+1) >= N
    return 3 * min_points_per_halfplane(p, S, directions) >= n;
}

}  // namespace cpih
