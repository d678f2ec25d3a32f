#pragma once

#include <optional>
#include <set>
#include <variant>

#include "cpih/safe_region.hpp"

namespace cpih {

// Undirected interaction graph; a node's neighborhood includes itself.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // stored with first < second

    static Graph complete(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool adjacent(int u, int v) const;
    std::vector<int> neighborhood(int u) const;  // sorted, contains u
};

enum class Role { normal, adversarial };

// Adversary behaviors. Each defines both the advertised values (per observer,
// Byzantine) and how the adversary's own plotted state evolves.
struct FixedTarget {
    Point target;  // advertised to everyone; true state stays put
};
struct Runaway {
    Point velocity;  // true state drifts each step; advertised truthfully
};
struct RandomBox {
    Point lo, hi;  // advertised uniform in the box, fresh per observer
};
struct SplitTargets {
    std::vector<Point> targets;  // observer u receives targets[u % size]
};
using AdversaryStrategy = std::variant<FixedTarget, Runaway, RandomBox, SplitTargets>;

struct AgentRecord {
    int id = 0;
    Role role = Role::normal;
    Point state{0.0, 0.0};
    std::optional<AdversaryStrategy> strategy;  // adversarial agents only
};

enum class ImprecisionShape { none, square, disk };

// delta is the square half-width or disk radius; zero iff shape is none.
struct ImprecisionModel {
    ImprecisionShape shape = ImprecisionShape::none;
    double delta = 0.0;
};

struct Observation {
    int agent = 0;
    Point center{0.0, 0.0};   // observed/advertised state
    ConvexRegion region = ConvexRegion::point({0.0, 0.0});
};

struct ObservationSet {
    int observer = 0;
    std::vector<Observation> entries;  // sorted by agent id, includes self
};

// One observation round for normal agent u: normal neighbors are seen through
// the imprecision model (true state uniform within the potential region),
// adversarial neighbors advertise per strategy, self-observation is exact.
ObservationSet observe(const std::vector<AgentRecord>& world, const Graph& g,
                       const ImprecisionModel& m, int u, int step, Rng& rng);

struct StepOutcome {
    Point next{0.0, 0.0};
    std::optional<Point> safe;  // empty on hold
    bool held = false;
};

// Centerpoint-style update: the convex combination alpha*s + (1-alpha)*x with
// safe point s, holding (next = x) when the safe region is empty. With
// use_regions the full potential regions drive the computation; otherwise the
// observed centers alone (the imprecision-oblivious update).
StepOutcome consensus_step(const ObservationSet& obs, const Point& x_u,
                           double alpha, bool use_regions);

Point baseline_step(const ObservationSet& obs, const Point& x_u, double alpha);
Point cpih_step(const ObservationSet& obs, const Point& x_u, double alpha);

RegionFamily family_from_observations(const ObservationSet& obs, bool centers_only);

}  // namespace cpih
