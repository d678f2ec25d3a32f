#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpih/oracle.hpp"
#include "cpih/scenario.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

void print_summary(const cpih::RunSummary& s) {
    std::printf("final_diameter          %.12g\n", s.final_diameter);
    std::printf("max_hull_excursion      %.12g\n", s.max_hull_excursion);
    std::printf("hold_steps              %ld\n", s.hold_steps);
    std::printf("mean_diameter_last_500  %.12g\n", s.mean_diameter_last_500);
    std::printf("guarantee_holds         %s\n", s.guarantee_holds ? "yes" : "no");
}

std::vector<double> parse_delta_list(const std::string& list) {
    std::vector<double> deltas;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            deltas.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw cpih::ConfigError("--delta: cannot parse '" + item + "'");
        }
    }
    if (deltas.empty()) throw cpih::ConfigError("--delta: empty list");
    return deltas;
}

std::string delta_label(double d) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", d);
    std::string s = buf;
    for (char& c : s)
        if (c == '.') c = '_';
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-hull consensus simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "out";
    std::string delta_list;
    std::string regions_path;
    long samples = 10000;
    std::uint64_t audit_seed = 0;

    CLI::App* cmd_run = app.add_subcommand("run", "run a scenario and record outputs");
    cmd_run->add_option("scenario", scenario_path, "scenario file")->required();
    cmd_run->add_option("--out", out_dir, "output directory")->required();

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "run a scenario across imprecision levels");
    cmd_sweep->add_option("scenario", scenario_path, "scenario file")->required();
    cmd_sweep->add_option("--delta", delta_list, "comma-separated delta values")
        ->required();
    cmd_sweep->add_option("--out", out_dir, "output directory");

    CLI::App* cmd_audit = app.add_subcommand(
        "audit-ihull", "compare the invariant hull against the sampling reference");
    cmd_audit->add_option("regions", regions_path, "region family file")->required();
    cmd_audit->add_option("--samples", samples, "configuration sample count");
    cmd_audit->add_option("--seed", audit_seed, "sampling seed");

    CLI::App* cmd_version = app.add_subcommand("version", "print version");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_version->parsed()) {
            std::printf("simcli %s\n", kVersion);
            return 0;
        }
        if (cmd_run->parsed()) {
            const cpih::ScenarioConfig cfg = cpih::load_scenario(scenario_path);
            const cpih::RunSummary s = cpih::run_and_record(cfg, out_dir);
            print_summary(s);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            cpih::ScenarioConfig cfg = cpih::load_scenario(scenario_path);
            std::vector<double> deltas = parse_delta_list(delta_list);
            for (double d : deltas) {
                cpih::ScenarioConfig c = cfg;
                c.delta = d;
                if (d == 0.0) c.imprecision = cpih::ImprecisionShape::none;
                if (d > 0.0 && c.imprecision == cpih::ImprecisionShape::none)
                    c.imprecision = cpih::ImprecisionShape::square;
                const auto dir =
                    std::filesystem::path(out_dir) / ("delta_" + delta_label(d));
                const cpih::RunSummary s = cpih::run_and_record(c, dir);
                std::printf("delta=%g  final_diameter=%.6g  max_hull_excursion=%.6g  "
                            "hold_steps=%ld  mean_diameter_last_500=%.6g\n",
                            d, s.final_diameter, s.max_hull_excursion, s.hold_steps,
                            s.mean_diameter_last_500);
            }
            return 0;
        }
        if (cmd_audit->parsed()) {
            if (samples < 1) throw cpih::ConfigError("--samples: must be positive");
            const cpih::RegionFamily fam = cpih::load_region_family(regions_path);
            const cpih::OracleReport r =
                cpih::audit_invariant_hull(fam, samples, audit_seed, regions_path);
            std::printf("target                  %s\n", r.target.c_str());
            std::printf("samples                 %ld\n", r.samples);
            std::printf("hausdorff_distance      %.12g\n", r.hausdorff);
            std::printf("containment_violations  %ld\n", r.containment_violations);
            return r.containment_violations == 0 ? 0 : 1;
        }
    } catch (const cpih::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const cpih::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
