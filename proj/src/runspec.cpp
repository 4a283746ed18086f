#include "fbcd/runspec.hpp"

#include <cmath>

#include "json.hpp"

namespace fbcd {

namespace {

using nlohmann::json;

double require_number(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) throw SchemaError(path + "." + key);
    if (!obj[key].is_number()) throw SchemaError(path + "." + key + " (expected a number)");
    return obj[key].get<double>();
}

double opt_number(const json& obj, const std::string& path, const std::string& key, double def) {
    if (!obj.contains(key)) return def;
    if (!obj[key].is_number()) throw SchemaError(path + "." + key + " (expected a number)");
    return obj[key].get<double>();
}

} // namespace

RunSpec parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not well-formed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level (expected an object)");

    RunSpec spec;
    if (!doc.contains("params") || !doc["params"].is_object()) throw SchemaError("params");
    const json& p = doc["params"];
    spec.params.d1 = require_number(p, "params", "d1");
    spec.params.d2 = require_number(p, "params", "d2");
    spec.params.r1 = require_number(p, "params", "r1");
    spec.params.r2 = require_number(p, "params", "r2");
    spec.params.k = require_number(p, "params", "k");
    spec.params.h = require_number(p, "params", "h");
    spec.params.mu1 = require_number(p, "params", "mu1");
    spec.params.mu2 = require_number(p, "params", "mu2");
    spec.params.validate();

    if (!doc.contains("init") || !doc["init"].is_object()) throw SchemaError("init");
    const json& in = doc["init"];
    spec.init.s1_0 = require_number(in, "init", "s1_0");
    spec.init.s2_0 = require_number(in, "init", "s2_0");
    if (in.contains("family")) {
        if (!in["family"].is_string()) throw SchemaError("init.family (expected a string)");
        spec.init.family = in["family"].get<std::string>();
    }
    if (spec.init.family != "cosine" && spec.init.family != "bump" &&
        spec.init.family != "custom-table")
        throw ValueError("init.family must be one of cosine|bump|custom-table");
    spec.init.u_amp = opt_number(in, "init", "u_amp", 0.5);
    spec.init.v_amp = opt_number(in, "init", "v_amp", 0.5);
    if (spec.init.family == "custom-table") {
        if (!in.contains("u_table") || !in["u_table"].is_array()) throw SchemaError("init.u_table");
        if (!in.contains("v_table") || !in["v_table"].is_array()) throw SchemaError("init.v_table");
        spec.init.u_table = in["u_table"].get<std::vector<double>>();
        spec.init.v_table = in["v_table"].get<std::vector<double>>();
    }
    if (!(spec.init.s1_0 > 0)) throw ValueError("init.s1_0 must be positive");
    if (!(spec.init.s2_0 > 0)) throw ValueError("init.s2_0 must be positive");
    if (!(spec.init.u_amp > 0) || !(spec.init.v_amp > 0))
        throw ValueError("init amplitudes must be positive");

    const json grid_obj = doc.contains("grid") ? doc["grid"] : json::object();
    if (!grid_obj.is_object()) throw SchemaError("grid");
    spec.grid.n_xi = int(opt_number(grid_obj, "grid", "n_xi", 256));
    spec.grid.dt = opt_number(grid_obj, "grid", "dt", 5e-4);
    spec.grid.t_end = opt_number(grid_obj, "grid", "t_end", 10.0);
    spec.grid.snapshot_stride = int(opt_number(grid_obj, "grid", "snapshot_stride", 0));
    spec.grid.validate(std::max(spec.params.r1, spec.params.r2));

    const json out_obj = doc.contains("outputs") ? doc["outputs"] : json::object();
    if (!out_obj.is_object()) throw SchemaError("outputs");
    if (out_obj.contains("dir")) {
        if (!out_obj["dir"].is_string()) throw SchemaError("outputs.dir (expected a string)");
        spec.outputs.dir = out_obj["dir"].get<std::string>();
    }
    if (out_obj.contains("svg")) {
        if (!out_obj["svg"].is_boolean()) throw SchemaError("outputs.svg (expected a boolean)");
        spec.outputs.svg = out_obj["svg"].get<bool>();
    }
    if (out_obj.contains("profiles")) {
        if (!out_obj["profiles"].is_boolean())
            throw SchemaError("outputs.profiles (expected a boolean)");
        spec.outputs.profiles = out_obj["profiles"].get<bool>();
    }
    if (doc.contains("preset")) {
        if (!doc["preset"].is_string()) throw SchemaError("preset (expected a string)");
        spec.preset = doc["preset"].get<std::string>();
    }
    return spec;
}

std::string echo_config(const RunSpec& spec) {
    json doc;
    doc["params"] = {{"d1", spec.params.d1}, {"d2", spec.params.d2}, {"r1", spec.params.r1},
                     {"r2", spec.params.r2}, {"k", spec.params.k},   {"h", spec.params.h},
                     {"mu1", spec.params.mu1}, {"mu2", spec.params.mu2}};
    doc["init"] = {{"family", spec.init.family}, {"s1_0", spec.init.s1_0},
                   {"s2_0", spec.init.s2_0},     {"u_amp", spec.init.u_amp},
                   {"v_amp", spec.init.v_amp}};
    if (spec.init.family == "custom-table") {
        doc["init"]["u_table"] = spec.init.u_table;
        doc["init"]["v_table"] = spec.init.v_table;
    }
    doc["grid"] = {{"n_xi", spec.grid.n_xi},
                   {"dt", spec.grid.dt},
                   {"t_end", spec.grid.t_end},
                   {"snapshot_stride", spec.grid.snapshot_stride}};
    doc["outputs"] = {{"dir", spec.outputs.dir},
                      {"svg", spec.outputs.svg},
                      {"profiles", spec.outputs.profiles}};
    if (!spec.preset.empty()) doc["preset"] = spec.preset;
    return doc.dump(2);
}

InitialData make_initial(const InitSpec& init, int n_samples) {
    InitialData data;
    data.s1_0 = init.s1_0;
    data.s2_0 = init.s2_0;
    if (init.family == "cosine") {
        data.u0 = cosine_profile(init.u_amp, n_samples - 1);
        data.v0 = cosine_profile(init.v_amp, n_samples - 1);
    } else if (init.family == "bump") {
        data.u0 = bump_profile(init.u_amp, n_samples - 1);
        data.v0 = bump_profile(init.v_amp, n_samples - 1);
    } else {
        data.u0 = init.u_table;
        data.v0 = init.v_table;
    }
    return data;
}

namespace {

RunSpec base_spec() {
    RunSpec s;
    s.grid.n_xi = 256;
    s.grid.dt = 5e-4;
    return s;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"thm1-vanish",     "thm2-exclusion", "thm3-coexist",       "thm5-fast-strong",
            "thm6-slow-strong", "prop21-persistence", "blowup-inject", "indeterminate-short"};
}

RunSpec preset(const std::string& name) {
    RunSpec s = base_spec();
    s.preset = name;
    if (name == "thm1-vanish") {
        // both fronts start short and both front coefficients are small:
        // both species die out and both fronts stall below pi/2
        s.params = {1, 1, 1, 1, 0.5, 0.5, 0.05, 0.05};
        s.init = {"cosine", 0.5, 0.5, 0.5, 0.5, {}, {}};
        s.grid.t_end = 200;
    } else if (name == "thm2-exclusion") {
        // species 1 vanishes, species 2 spreads and approaches 1
        s.params = {1, 1, 1, 1, 0.5, 0.5, 0.05, 1.0};
        s.init = {"cosine", 0.5, 0.8, 0.4, 3.0, {}, {}};
        s.grid.t_end = 150;
    } else if (name == "thm3-coexist") {
        s.params = {1, 1, 1, 1, 0.5, 0.5, 1.0, 1.0};
        s.init = {"cosine", 0.5, 0.5, 2.0, 2.0, {}, {}};
        s.grid.t_end = 200;
    } else if (name == "thm5-fast-strong") {
        // superior competitor fast (mu1 large), inferior slow (mu2 small)
        s.params = {1, 1, 1, 1, 0.3, 1.5, 2.0, 0.05};
        s.init = {"cosine", 0.8, 0.8, 2.5, 3.0, {}, {}};
        s.grid.t_end = 80;
    } else if (name == "thm6-slow-strong") {
        // strong competitor too slow to catch the weak one
        s.params = {1, 1, 1, 1, 0.3, 0.5, 0.05, 1.0};
        s.init = {"cosine", 0.5, 0.8, 1.0, 6.0, {}, {}};
        s.grid.t_end = 100;
    } else if (name == "prop21-persistence") {
        // decoupled persistence scenario on a generous initial span
        s.params = {1, 1, 1, 1, 0.0, 0.0, 1.0, 1.0};
        s.init = {"cosine", 0.5, 0.5, 2 * M_PI, 2 * M_PI, {}, {}};
        s.grid.t_end = 60;
    } else if (name == "blowup-inject") {
        // deliberately breaks the explicit mesh-advection CFL: the huge front
        // coefficient makes the mapped advection term unstable
        s.params = {1, 1, 1, 1, 0.0, 0.0, 5e4, 1.0};
        s.init = {"cosine", 0.8, 0.5, 1.0, 1.0, {}, {}};
        s.grid.t_end = 5;
    } else if (name == "indeterminate-short") {
        // too short to resolve the dichotomy: density still large, front subcritical
        s.params = {1, 1, 1, 1, 0.5, 0.5, 0.05, 0.05};
        s.init = {"cosine", 0.5, 0.5, 1.0, 1.0, {}, {}};
        s.grid.t_end = 5;
    } else {
        throw ValueError("unknown preset: " + name);
    }
    return s;
}

} // namespace fbcd
