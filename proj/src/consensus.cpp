#include "cpih/consensus.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpih {

Graph Graph::complete(int n) {
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.insert({u, v});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph has a self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph edge references unknown agent");
        g.edges.insert({std::min(u, v), std::max(u, v)});
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> Graph::neighborhood(int u) const {
    std::vector<int> nbrs;
    for (int v = 0; v < n; ++v)
        if (v == u || adjacent(u, v)) nbrs.push_back(v);
    return nbrs;
}

namespace {

ConvexRegion region_around(const Point& center, const ImprecisionModel& m) {
    switch (m.shape) {
        case ImprecisionShape::none:
            return ConvexRegion::point(center);
        case ImprecisionShape::square:
            return ConvexRegion::square(center, m.delta);
        case ImprecisionShape::disk:
            return ConvexRegion::disk(center, m.delta);
    }
    return ConvexRegion::point(center);
}

// Offset uniform in the (centrally symmetric) imprecision shape; with
// r = x + offset the true state x is uniform within the region around r.
Point sample_offset(const ImprecisionModel& m, Rng& rng) {
    switch (m.shape) {
        case ImprecisionShape::none:
            return Point::Zero();
        case ImprecisionShape::square:
            return sample_point(ConvexRegion::square(Point::Zero(), m.delta), rng);
        case ImprecisionShape::disk:
            return sample_point(ConvexRegion::disk(Point::Zero(), m.delta), rng);
    }
    return Point::Zero();
}

Point advertised_state(const AgentRecord& adversary, int observer, Rng& rng) {
    const AdversaryStrategy& strat = *adversary.strategy;
    if (const auto* fixed = std::get_if<FixedTarget>(&strat)) return fixed->target;
    if (std::get_if<Runaway>(&strat)) return adversary.state;
    if (const auto* box = std::get_if<RandomBox>(&strat)) {
        const double x = rng.uniform(box->lo.x(), box->hi.x());
        const double y = rng.uniform(box->lo.y(), box->hi.y());
        return Point(x, y);
    }
    const auto& split = std::get<SplitTargets>(strat);
    return split.targets[static_cast<std::size_t>(observer) % split.targets.size()];
}

}  // namespace

ObservationSet observe(const std::vector<AgentRecord>& world, const Graph& g,
                       const ImprecisionModel& m, int u, int /*step*/, Rng& rng) {
    if (world.at(u).role != Role::normal)
        throw std::invalid_argument("observer must be a normal agent");
    ObservationSet obs;
    obs.observer = u;
    for (int v : g.neighborhood(u)) {
        const AgentRecord& agent = world.at(v);
        Observation entry;
        entry.agent = v;
        if (v == u) {
            entry.center = agent.state;
            entry.region = ConvexRegion::point(agent.state);
        } else if (agent.role == Role::normal) {
            entry.center = agent.state + sample_offset(m, rng);
            entry.region = region_around(entry.center, m);
        } else {
            entry.center = advertised_state(agent, u, rng);
            entry.region = region_around(entry.center, m);
        }
        obs.entries.push_back(std::move(entry));
    }
    return obs;
}

RegionFamily family_from_observations(const ObservationSet& obs, bool centers_only) {
    RegionFamily fam;
    fam.members.reserve(obs.entries.size());
    for (const Observation& e : obs.entries) {
        if (centers_only) {
            fam.members.push_back({e.agent, ConvexRegion::point(e.center)});
        } else {
            fam.members.push_back({e.agent, e.region});
        }
    }
    return fam;
}

StepOutcome consensus_step(const ObservationSet& obs, const Point& x_u,
                           double alpha, bool use_regions) {
    if (obs.entries.size() < 3)
        throw std::invalid_argument("need at least 3 observations");
    const RegionFamily fam = family_from_observations(obs, !use_regions);
    const SafeRegionResult r = cpih_region(fam);
    StepOutcome out;
    out.safe = select_safe_point(r);
    if (!out.safe) {
        out.next = x_u;
        out.held = true;
    } else {
        out.next = alpha * (*out.safe) + (1.0 - alpha) * x_u;
    }
    return out;
}

Point baseline_step(const ObservationSet& obs, const Point& x_u, double alpha) {
    return consensus_step(obs, x_u, alpha, false).next;
}

Point cpih_step(const ObservationSet& obs, const Point& x_u, double alpha) {
    return consensus_step(obs, x_u, alpha, true).next;
}

}  // namespace cpih
