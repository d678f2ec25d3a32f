#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cpih/scenario.hpp"

namespace cpih {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void append_point(std::string& line, const std::optional<Point>& p) {
    if (p) {
        line += ',';
        line += fmt(p->x());
        line += ',';
        line += fmt(p->y());
    } else {
        line += ",,";
    }
}

}  // namespace

void write_trace_csv(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write trace file: " + path.string());
    out << "step,id,role,x,y,obs_x,obs_y,safe_x,safe_y,held,in_hull\n";
    for (const TraceRow& row : trace.rows) {
        std::string line = std::to_string(row.step);
        line += ',';
        line += std::to_string(row.id);
        line += ',';
        line += (row.role == Role::normal) ? "normal" : "adversarial";
        line += ',';
        line += fmt(row.state.x());
        line += ',';
        line += fmt(row.state.y());
        append_point(line, row.observed);
        append_point(line, row.safe);
        line += row.held ? ",1" : ",0";
        line += row.in_hull ? ",1" : ",0";
        out << line << '\n';
    }
    if (!out) throw IoError("failed writing trace file: " + path.string());
}

void write_summary_json(const RunSummary& s, const ScenarioConfig& cfg,
                        const std::filesystem::path& path) {
    nlohmann::json j;
    j["n_agents"] = cfg.n_agents;
    j["algorithm"] = cfg.algorithm == Algorithm::cpih ? "cpih" : "baseline";
    j["delta"] = cfg.delta;
    j["steps"] = cfg.steps;
    j["seed"] = cfg.seed;
    j["adversaries"] = cfg.adversaries.size();
    j["guarantee_holds"] = s.guarantee_holds;
    j["final_diameter"] = s.final_diameter;
    j["max_hull_excursion"] = s.max_hull_excursion;
    j["hold_steps"] = s.hold_steps;
    j["mean_diameter_last_500"] = s.mean_diameter_last_500;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write summary file: " + path.string());
    out << j.dump(2) << '\n';
}

RunSummary run_and_record(const ScenarioConfig& cfg,
                          const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir.string());
    const Trace trace = run(cfg);
    const RunSummary summary = summarize(trace);
    write_trace_csv(trace, out_dir / "trace.csv");
    write_summary_json(summary, cfg, out_dir / "summary.json");
    write_trajectory_svg(trace, out_dir / "trajectories.svg");
    return summary;
}

}  // namespace cpih
