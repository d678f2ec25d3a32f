#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "cpih/consensus.hpp"

namespace cpih {

// Scenario or input-file problems; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem problems; the CLI maps this to exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm { baseline, cpih };

struct AdversaryConfig {
    int id = 0;
    AdversaryStrategy strategy;
};

// Declarative experiment description. `delta` follows the scenario-file
// convention: full square width (the geometry layer receives half of it) or
// disk radius.
struct ScenarioConfig {
    int n_agents = 0;
    bool complete_graph = true;
    std::vector<std::pair<int, int>> edges;  // when not complete
    std::vector<AdversaryConfig> adversaries;
    ImprecisionShape imprecision = ImprecisionShape::none;
    double delta = 0.0;
    Algorithm algorithm = Algorithm::cpih;
    double alpha = 0.5;
    int steps = 5000;
    std::uint64_t seed = 0;
    bool initial_box = true;
    Point box_lo{0.0, 0.0}, box_hi{10.0, 10.0};
    PointList initial_states;  // when not box-uniform

    Graph graph() const;
    ImprecisionModel imprecision_model() const;
    // true when |adversaries| <= floor(n/3) - 1, the bound the safe-point
    // guarantee is stated for
    bool guarantee_holds() const;
    void validate() const;  // throws ConfigError naming the offending field
};

struct TraceRow {
    int step = 0;
    int id = 0;
    Role role = Role::normal;
    Point state{0.0, 0.0};
    std::optional<Point> observed;  // center seen by the lowest-id normal observer
    std::optional<Point> safe;      // safe point chosen at this step (normal agents)
    bool held = false;
    bool in_hull = false;  // inside the hull of normal agents' initial states
};

struct Trace {
    ScenarioConfig config;
    ConvexPolygon initial_normal_hull;
    std::vector<TraceRow> rows;  // one row per agent per step, t = 0..steps
};

struct RunSummary {
    double final_diameter = 0.0;        // max pairwise distance, final normal states
    double max_hull_excursion = 0.0;    // distance outside the initial normal hull
    long hold_steps = 0;                // total normal-agent holds
    double mean_diameter_last_500 = 0;  // time-averaged normal diameter
    bool guarantee_holds = false;
};

// Synchronous-round simulation; deterministic given the config (seed included).
Trace run(const ScenarioConfig& cfg);

RunSummary summarize(const Trace& trace);

ScenarioConfig load_scenario(const std::filesystem::path& path);
ScenarioConfig parse_scenario(const std::string& json_text);

// Writes trace.csv, summary.json, and trajectories.svg; returns the summary.
RunSummary run_and_record(const ScenarioConfig& cfg,
                          const std::filesystem::path& out_dir);

void write_trace_csv(const Trace& trace, const std::filesystem::path& path);
void write_summary_json(const RunSummary& s, const ScenarioConfig& cfg,
                        const std::filesystem::path& path);
void write_trajectory_svg(const Trace& trace, const std::filesystem::path& path);

// Region-family files for the invariant-hull audit subcommand.
RegionFamily load_region_family(const std::filesystem::path& path);

}  // namespace cpih
