#include <algorithm>
#include <map>

#include "cpih/scenario.hpp"

namespace cpih {

Graph ScenarioConfig::graph() const {
    if (complete_graph) return Graph::complete(n_agents);
    try {
        return Graph::from_edges(n_agents, edges);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("graph: ") + e.what());
    }
}

ImprecisionModel ScenarioConfig::imprecision_model() const {
    ImprecisionModel m;
    m.shape = imprecision;
    // scenario files carry the full square width; the geometry layer works
    // with half-widths (disk delta is already the radius)
    m.delta = (imprecision == ImprecisionShape::square) ? delta / 2.0 : delta;
    return m;
}

bool ScenarioConfig::guarantee_holds() const {
    return static_cast<int>(adversaries.size()) <= n_agents / 3 - 1;
}

void ScenarioConfig::validate() const {
    if (n_agents < 3) throw ConfigError("n_agents: need at least 3 agents");
    std::vector<int> ids;
    for (const AdversaryConfig& a : adversaries) {
        if (a.id < 0 || a.id >= n_agents)
            throw ConfigError("adversaries: id " + std::to_string(a.id) +
                              " out of range");
        ids.push_back(a.id);
        if (const auto* split = std::get_if<SplitTargets>(&a.strategy)) {
            if (split->targets.empty())
                throw ConfigError("adversaries: split strategy needs targets");
        }
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ConfigError("adversaries: duplicate adversary id");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ConfigError("alpha: must be in [0, 1]");
    if (steps < 1) throw ConfigError("steps: must be positive");
    if (delta < 0.0) throw ConfigError("imprecision.delta: must be nonnegative");
    if ((imprecision == ImprecisionShape::none) != (delta == 0.0))
        throw ConfigError("imprecision: delta must be zero iff shape is none");
    if (initial_box) {
        if (!(box_lo.x() < box_hi.x() && box_lo.y() < box_hi.y()))
            throw ConfigError("initial_states.box: empty box");
    } else if (static_cast<int>(initial_states.size()) != n_agents) {
        throw ConfigError("initial_states: need one point per agent");
    }
    const Graph g = graph();
    for (int u = 0; u < n_agents; ++u) {
        const bool adversarial =
            std::find(ids.begin(), ids.end(), u) != ids.end();
        if (adversarial) continue;
        const std::size_t nbrs = g.neighborhood(u).size();
        if (nbrs < 3)
            throw ConfigError("graph: normal agent " + std::to_string(u) +
                              " has a neighborhood smaller than 3");
        if (nbrs > 15)
            throw ConfigError("graph: neighborhood of agent " + std::to_string(u) +
                              " exceeds the exact-enumeration cap (15)");
    }
}

Trace run(const ScenarioConfig& cfg) {
    cfg.validate();
    const Graph g = cfg.graph();
    const ImprecisionModel model = cfg.imprecision_model();
    Rng rng(cfg.seed);

    std::vector<AgentRecord> world(cfg.n_agents);
    for (int i = 0; i < cfg.n_agents; ++i) {
        world[i].id = i;
        if (cfg.initial_box) {
            const double x = rng.uniform(cfg.box_lo.x(), cfg.box_hi.x());
            const double y = rng.uniform(cfg.box_lo.y(), cfg.box_hi.y());
            world[i].state = Point(x, y);
        } else {
            world[i].state = cfg.initial_states[i];
        }
    }
    for (const AdversaryConfig& a : cfg.adversaries) {
        world[a.id].role = Role::adversarial;
        world[a.id].strategy = a.strategy;
    }

    PointList normal_initial;
    for (const AgentRecord& agent : world)
        if (agent.role == Role::normal) normal_initial.push_back(agent.state);

    Trace trace;
    trace.config = cfg;
    trace.initial_normal_hull = convex_hull(normal_initial);
    trace.rows.reserve(static_cast<std::size_t>(cfg.n_agents) * (cfg.steps + 1));

    auto emit_row = [&](int step, const AgentRecord& agent,
                        std::optional<Point> observed, std::optional<Point> safe,
                        bool held) {
        TraceRow row;
        row.step = step;
        row.id = agent.id;
        row.role = agent.role;
        row.state = agent.state;
        row.observed = std::move(observed);
        row.safe = std::move(safe);
        row.held = held;
        row.in_hull =
            distance_to(trace.initial_normal_hull, agent.state) <= kGeomTol;
        trace.rows.push_back(std::move(row));
    };

    for (const AgentRecord& agent : world)
        emit_row(0, agent, std::nullopt, std::nullopt, false);

    const bool use_regions = cfg.algorithm == Algorithm::cpih;
    std::vector<StepOutcome> outcomes(cfg.n_agents);
    std::vector<std::optional<Point>> first_seen(cfg.n_agents);

    for (int t = 0; t < cfg.steps; ++t) {
        std::fill(first_seen.begin(), first_seen.end(), std::nullopt);
        // every normal agent observes, then all updates apply simultaneously
        for (int u = 0; u < cfg.n_agents; ++u) {
            if (world[u].role != Role::normal) continue;
            const ObservationSet obs = observe(world, g, model, u, t, rng);
            for (const Observation& e : obs.entries)
                if (!first_seen[e.agent]) first_seen[e.agent] = e.center;
            outcomes[u] = consensus_step(obs, world[u].state, cfg.alpha, use_regions);
        }
        for (int u = 0; u < cfg.n_agents; ++u) {
            AgentRecord& agent = world[u];
            if (agent.role == Role::normal) {
                agent.state = outcomes[u].next;
            } else if (const auto* runaway =
                           std::get_if<Runaway>(&*agent.strategy)) {
                agent.state += runaway->velocity;
            }
        }
        for (int u = 0; u < cfg.n_agents; ++u) {
            const bool normal = world[u].role == Role::normal;
            emit_row(t + 1, world[u], first_seen[u],
                     normal ? outcomes[u].safe : std::nullopt,
                     normal && outcomes[u].held);
        }
    }
    return trace;
}

RunSummary summarize(const Trace& trace) {
    const ScenarioConfig& cfg = trace.config;
    RunSummary s;
    s.guarantee_holds = cfg.guarantee_holds();

    std::vector<PointList> normal_states(cfg.steps + 1);
    for (const TraceRow& row : trace.rows) {
        if (row.role != Role::normal) continue;
        normal_states[row.step].push_back(row.state);
        const double d = distance_to(trace.initial_normal_hull, row.state);
        if (d > kGeomTol) s.max_hull_excursion = std::max(s.max_hull_excursion, d);
        if (row.held) ++s.hold_steps;
    }

    auto diameter = [](const PointList& pts) {
        double best = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                best = std::max(best, (pts[i] - pts[j]).norm());
        return best;
    };

    s.final_diameter = diameter(normal_states[cfg.steps]);
    const int window = std::min(cfg.steps + 1, 500);
    double sum = 0.0;
    for (int t = cfg.steps - window + 1; t <= cfg.steps; ++t)
        sum += diameter(normal_states[t]);
    s.mean_diameter_last_500 = sum / window;
    return s;
}

}  // namespace cpih
