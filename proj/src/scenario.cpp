#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpih/scenario.hpp"

namespace cpih {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& context) {
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ConfigError(context + ": unknown field '" + item.key() + "'");
    }
}

Point parse_point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(field + ": expected [x, y]");
    return Point(j[0].get<double>(), j[1].get<double>());
}

PointList parse_points(const json& j, const std::string& field) {
    if (!j.is_array()) throw ConfigError(field + ": expected an array of points");
    PointList pts;
    for (const auto& p : j) pts.push_back(parse_point(p, field));
    return pts;
}

AdversaryStrategy parse_strategy(const json& adv, const std::string& ctx) {
    const std::string name = adv.at("strategy").get<std::string>();
    if (name == "fixed_target") {
        require_keys(adv, {"id", "strategy", "target"}, ctx);
        return FixedTarget{parse_point(adv.at("target"), ctx + ".target")};
    }
    if (name == "runaway") {
        require_keys(adv, {"id", "strategy", "velocity"}, ctx);
        return Runaway{parse_point(adv.at("velocity"), ctx + ".velocity")};
    }
    if (name == "random") {
        require_keys(adv, {"id", "strategy", "box"}, ctx);
        const json& b = adv.at("box");
        if (!b.is_array() || b.size() != 4)
            throw ConfigError(ctx + ".box: expected [xmin, ymin, xmax, ymax]");
        return RandomBox{Point(b[0].get<double>(), b[1].get<double>()),
                         Point(b[2].get<double>(), b[3].get<double>())};
    }
    if (name == "split") {
        require_keys(adv, {"id", "strategy", "targets"}, ctx);
        return SplitTargets{parse_points(adv.at("targets"), ctx + ".targets")};
    }
    throw ConfigError(ctx + ".strategy: unknown strategy '" + name + "'");
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("scenario: expected a JSON object");
    require_keys(j,
                 {"n_agents", "graph", "adversaries", "imprecision", "algorithm",
                  "alpha", "steps", "seed", "initial_states"},
                 "scenario");

    ScenarioConfig cfg;
    if (!j.contains("n_agents") || !j["n_agents"].is_number_integer())
        throw ConfigError("n_agents: required integer");
    cfg.n_agents = j["n_agents"].get<int>();

    if (!j.contains("algorithm"))
        throw ConfigError("algorithm: required ('baseline' or 'cpih')");
    const std::string algo = j["algorithm"].get<std::string>();
    if (algo == "baseline") {
        cfg.algorithm = Algorithm::baseline;
    } else if (algo == "cpih") {
        cfg.algorithm = Algorithm::cpih;
    } else {
        throw ConfigError("algorithm: unknown value '" + algo + "'");
    }

    if (j.contains("graph")) {
        const json& g = j["graph"];
        if (g.is_string()) {
            if (g.get<std::string>() != "complete")
                throw ConfigError("graph: expected 'complete' or {\"edges\": [...]}");
            cfg.complete_graph = true;
        } else if (g.is_object()) {
            require_keys(g, {"edges"}, "graph");
            cfg.complete_graph = false;
            for (const auto& e : g.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw ConfigError("graph.edges: expected pairs [u, v]");
                cfg.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
        } else {
            throw ConfigError("graph: expected 'complete' or {\"edges\": [...]}");
        }
    }

    if (j.contains("adversaries")) {
        if (!j["adversaries"].is_array())
            throw ConfigError("adversaries: expected an array");
        int index = 0;
        for (const auto& adv : j["adversaries"]) {
            const std::string ctx = "adversaries[" + std::to_string(index++) + "]";
            if (!adv.is_object() || !adv.contains("id") || !adv.contains("strategy"))
                throw ConfigError(ctx + ": need 'id' and 'strategy'");
            AdversaryConfig a;
            a.id = adv.at("id").get<int>();
            a.strategy = parse_strategy(adv, ctx);
            cfg.adversaries.push_back(std::move(a));
        }
    }

    if (j.contains("imprecision")) {
        const json& imp = j["imprecision"];
        require_keys(imp, {"shape", "delta"}, "imprecision");
        const std::string shape = imp.at("shape").get<std::string>();
        if (shape == "none") {
            cfg.imprecision = ImprecisionShape::none;
        } else if (shape == "square") {
            cfg.imprecision = ImprecisionShape::square;
        } else if (shape == "disk") {
            cfg.imprecision = ImprecisionShape::disk;
        } else {
            throw ConfigError("imprecision.shape: unknown shape '" + shape + "'");
        }
        cfg.delta = imp.contains("delta") ? imp.at("delta").get<double>() : 0.0;
    }

    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("steps")) cfg.steps = j["steps"].get<int>();
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            throw ConfigError("seed: must be a nonnegative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }

    if (j.contains("initial_states")) {
        const json& init = j["initial_states"];
        if (init.is_object() && init.contains("box")) {
            require_keys(init, {"box"}, "initial_states");
            const json& b = init.at("box");
            if (!b.is_array() || b.size() != 4)
                throw ConfigError("initial_states.box: expected [xmin, ymin, xmax, ymax]");
            cfg.initial_box = true;
            cfg.box_lo = Point(b[0].get<double>(), b[1].get<double>());
            cfg.box_hi = Point(b[2].get<double>(), b[3].get<double>());
        } else if (init.is_object() && init.contains("points")) {
            require_keys(init, {"points"}, "initial_states");
            cfg.initial_box = false;
            cfg.initial_states = parse_points(init.at("points"), "initial_states.points");
        } else {
            throw ConfigError("initial_states: expected {\"box\": [...]} or {\"points\": [...]}");
        }
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

RegionFamily load_region_family(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read regions file: " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("regions parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("regions") || !j["regions"].is_array())
        throw ConfigError("regions: expected {\"regions\": [...]}");
    require_keys(j, {"regions"}, "regions");

    std::vector<ConvexRegion> regions;
    int index = 0;
    for (const auto& r : j["regions"]) {
        const std::string ctx = "regions[" + std::to_string(index++) + "]";
        if (!r.is_object() || !r.contains("shape"))
            throw ConfigError(ctx + ": need 'shape'");
        const std::string shape = r.at("shape").get<std::string>();
        try {
            if (shape == "point") {
                require_keys(r, {"shape", "center"}, ctx);
                regions.push_back(ConvexRegion::point(parse_point(r.at("center"), ctx)));
            } else if (shape == "square") {
                require_keys(r, {"shape", "center", "half_width"}, ctx);
                regions.push_back(ConvexRegion::square(
                    parse_point(r.at("center"), ctx), r.at("half_width").get<double>()));
            } else if (shape == "disk") {
                require_keys(r, {"shape", "center", "radius"}, ctx);
                regions.push_back(ConvexRegion::disk(parse_point(r.at("center"), ctx),
                                                     r.at("radius").get<double>()));
            } else if (shape == "polygon") {
                require_keys(r, {"shape", "vertices"}, ctx);
                regions.push_back(ConvexRegion::polygon(
                    convex_hull(parse_points(r.at("vertices"), ctx))));
            } else {
                throw ConfigError(ctx + ".shape: unknown shape '" + shape + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(ctx + ": " + e.what());
        }
    }
    if (regions.size() < 3)
        throw ConfigError("regions: need at least 3 regions");
    return RegionFamily::of(std::move(regions));
}

}  // namespace cpih
