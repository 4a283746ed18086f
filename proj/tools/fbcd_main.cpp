#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "fbcd/analysis.hpp"
#include "fbcd/io.hpp"
#include "fbcd/runspec.hpp"
#include "fbcd/semiwave.hpp"
#include "fbcd/solver.hpp"
#include "fbcd/svg.hpp"
#include "fbcd/verify.hpp"

namespace fs = std::filesystem;
using namespace fbcd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitSolverError = 2;
constexpr int kExitStrictIndeterminate = 3;
constexpr int kExitUsage = 64;

RunSpec load_spec(const std::string& config_path, const std::string& preset_name,
                  const std::string& out_dir) {
    RunSpec spec;
    if (!preset_name.empty()) {
        spec = preset(preset_name);
    } else if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ValueError("cannot open config file: " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        spec = parse_config(ss.str());
    } else {
        throw ValueError("either --config or --preset is required");
    }
    if (!out_dir.empty()) spec.outputs.dir = out_dir;
    return spec;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    os << text;
}

void emit_outputs(const RunSpec& spec, const Trajectory& traj, const std::string& outcome_json) {
    const fs::path dir(spec.outputs.dir);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "trajectory.csv");
        write_trajectory_csv(traj, os);
    }
    if (spec.outputs.profiles) {
        std::ofstream os(dir / "profiles.csv");
        write_profiles_csv(traj, os);
    }
    write_file(dir / "outcome.json", outcome_json);
    write_file(dir / "config_echo.json", echo_config(spec));
    if (spec.outputs.svg) {
        {
            std::ofstream os(dir / "fronts.svg");
            write_svg_lines(os,
                            {{"s1(t)", "#377eb8", traj.t, traj.s1},
                             {"s2(t)", "#e41a1c", traj.t, traj.s2}},
                            "front positions", "t", "s");
        }
        {
            const ProfileSnapshot& p = traj.profiles.back();
            const int n = int(p.u.size()) - 1;
            std::vector<double> xu(p.u.size()), xv(p.v.size());
            for (int j = 0; j <= n; ++j) {
                xu[std::size_t(j)] = p.s1 * double(j) / n;
                xv[std::size_t(j)] = p.s2 * double(j) / n;
            }
            std::ofstream os(dir / "profiles.svg");
            write_svg_lines(os,
                            {{"u(T,x)", "#377eb8", xu, p.u}, {"v(T,x)", "#e41a1c", xv, p.v}},
                            "final profiles", "x", "density");
        }
    }
}

int cmd_simulate(const RunSpec& spec, bool strict) {
    const InitialData init = make_initial(spec.init);
    const Trajectory traj = run(spec.params, init, spec.grid);

    const Thresholds thr = thresholds(spec.params);
    Outcome outcome;  // defaults to Indeterminate when the run is too short to fit
    std::vector<CheckResult> checks;
    SpeedBoundReport speeds;
    bool classified = false;
    try {
        outcome = classify(traj, thr);
        checks = dichotomy_consistency(outcome, thr, traj, spec.params);
        speeds = speed_lower_bound_check(traj, spec.params);
        classified = true;
    } catch (const InsufficientData&) {
        outcome.species1.final_front = traj.s1.back();
        outcome.species2.final_front = traj.s2.back();
        outcome.species1.final_max = traj.u_max.back();
        outcome.species2.final_max = traj.v_max.back();
    }
    emit_outputs(spec, traj, outcome_to_json(outcome, checks, speeds));

    std::cout << "t_end=" << traj.t.back() << "  s1=" << traj.s1.back()
              << "  s2=" << traj.s2.back() << "  species1=" << to_string(outcome.species1.label)
              << "  species2=" << to_string(outcome.species2.label)
              << (traj.watchdog_fired ? "  [watchdog fired]" : "") << '\n';
    (void)classified;
    if (strict && (outcome.species1.label == Label::Indeterminate ||
                   outcome.species2.label == Label::Indeterminate))
        return kExitStrictIndeterminate;
    return kExitOk;
}

int cmd_semiwave(double mu, double a, double b, double d, double tol, const std::string& out) {
    const SemiWave sw = solve_semiwave(SemiWaveParams(mu, a, b, d), tol);
    std::cout << "c = " << format_full(sw.c) << "  (c_max = 2*sqrt(ad) = "
              << 2 * std::sqrt(a * d) << ", residual = " << sw.residual << ")\n";
    if (!out.empty()) {
        std::ofstream os(out);
        os << "y,q\n";
        for (std::size_t i = 0; i < sw.y_grid.size(); ++i)
            os << format_full(sw.y_grid[i]) << ',' << format_full(sw.q[i]) << '\n';
    }
    return kExitOk;
}

struct SweepAxis {
    std::string param;
    std::vector<double> values;
};

SweepAxis parse_axis(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ValueError("axis must look like name=v1,v2,...");
    SweepAxis axis;
    axis.param = text.substr(0, eq);
    std::stringstream ss(text.substr(eq + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) axis.values.push_back(std::stod(tok));
    if (axis.values.empty()) throw ValueError("axis has no values: " + text);
    return axis;
}

void set_param(Params& p, const std::string& name, double v) {
    if (name == "d1") p.d1 = v;
    else if (name == "d2") p.d2 = v;
    else if (name == "r1") p.r1 = v;
    else if (name == "r2") p.r2 = v;
    else if (name == "k") p.k = v;
    else if (name == "h") p.h = v;
    else if (name == "mu1") p.mu1 = v;
    else if (name == "mu2") p.mu2 = v;
    else throw ValueError("unknown sweep parameter: " + name);
}

struct SweepCell {
    double a1 = 0, a2 = 0;
    std::string label1 = "Error", label2 = "Error";
    double slope1 = 0, slope2 = 0, s1_end = 0, s2_end = 0;
    std::string error;
};

int cmd_sweep(const RunSpec& spec, const std::string& axis1_text, const std::string& axis2_text) {
    const SweepAxis ax1 = parse_axis(axis1_text);
    const SweepAxis ax2 = axis2_text.empty() ? SweepAxis{"", {0.0}} : parse_axis(axis2_text);
    const std::size_t n1 = ax1.values.size(), n2 = ax2.values.size();
    if (n1 * n2 > 10000) throw ValueError("sweep grid exceeds 10^4 cells");

    std::vector<SweepCell> cells(n1 * n2);
    auto work = [&](std::size_t idx) {
        SweepCell& cell = cells[idx];
        cell.a1 = ax1.values[idx / n2];
        cell.a2 = ax2.values[idx % n2];
        try {
            RunSpec local = spec;
            set_param(local.params, ax1.param, cell.a1);
            if (!ax2.param.empty()) set_param(local.params, ax2.param, cell.a2);
            local.params.validate();
            const Trajectory traj = run(local.params, make_initial(local.init), local.grid);
            const Outcome out = classify(traj, thresholds(local.params));
            cell.label1 = to_string(out.species1.label);
            cell.label2 = to_string(out.species2.label);
            cell.slope1 = out.species1.slope;
            cell.slope2 = out.species2.slope;
            cell.s1_end = traj.s1.back();
            cell.s2_end = traj.s2.back();
        } catch (const std::exception& e) {
            cell.error = e.what();  // cell failures never abort the sweep
        }
    };

    const std::size_t n_threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futures;
    for (std::size_t t = 0; t < n_threads; ++t)
        futures.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < cells.size(); i += n_threads) work(i);
        }));
    for (auto& f : futures) f.get();

    const fs::path dir(spec.outputs.dir);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "sweep.csv");
        os << ax1.param << ',' << (ax2.param.empty() ? "-" : ax2.param)
           << ",label1,label2,slope1,slope2,s1_end,s2_end,error\n";
        for (const SweepCell& c : cells)
            os << format_full(c.a1) << ',' << format_full(c.a2) << ',' << c.label1 << ','
               << c.label2 << ',' << format_full(c.slope1) << ',' << format_full(c.slope2) << ','
               << format_full(c.s1_end) << ',' << format_full(c.s2_end) << ",\"" << c.error
               << "\"\n";
    }
    if (spec.outputs.svg) {
        // categorical map of the outcome pair
        auto category = [](const SweepCell& c) {
            if (!c.error.empty()) return 4;
            const bool s1 = c.label1 == "Spreading", s2 = c.label2 == "Spreading";
            if (s1 && s2) return 0;
            if (s1) return 1;
            if (s2) return 2;
            return 3;
        };
        std::vector<std::vector<int>> grid(n2, std::vector<int>(n1, 3));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) grid[j][i] = category(cells[i * n2 + j]);
        std::ofstream os(dir / "sweep.svg");
        write_svg_heatmap(os, grid,
                          {"both spread", "only u spreads", "only v spreads", "neither/indet.",
                           "error"},
                          ax1.values, ax2.values, "outcome phase diagram", ax1.param,
                          ax2.param.empty() ? "-" : ax2.param);
    }
    std::cout << "sweep complete: " << cells.size() << " cells -> " << (dir / "sweep.csv") << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free-boundary competition-diffusion laboratory"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir;
    bool strict = false;

    auto* sim = app.add_subcommand("simulate", "run the coupled two-species model");
    sim->add_option("--config", config_path, "JSON config path");
    sim->add_option("--preset", preset_name, "named preset");
    sim->add_option("--out", out_dir, "output directory (overrides config)");
    sim->add_flag("--strict", strict, "exit 3 when the outcome is Indeterminate");

    double mu = 1, a = 1, b = 1, d = 1, tol = 1e-8;
    std::string profile_out;
    auto* semi = app.add_subcommand("semiwave", "solve one semi-wave problem");
    semi->add_option("--mu", mu)->required();
    semi->add_option("--a", a)->required();
    semi->add_option("--b", b)->required();
    semi->add_option("--d", d)->required();
    semi->add_option("--tol", tol);
    semi->add_option("--profile-out", profile_out, "write profile CSV here");

    std::string axis1, axis2;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep / phase diagram");
    sweep->add_option("--config", config_path, "JSON config path");
    sweep->add_option("--preset", preset_name, "named preset");
    sweep->add_option("--out", out_dir, "output directory (overrides config)");
    sweep->add_option("--axis1", axis1, "name=v1,v2,... over a Params field")->required();
    sweep->add_option("--axis2", axis2, "optional second axis");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run acceptance suites");
    verify->add_option("suite", suite, "semiwave|dichotomy|coexistence|thm5|thm6|convergence|all");

    std::string show;
    auto* presets_cmd = app.add_subcommand("presets", "list presets");
    presets_cmd->add_option("--show", show, "print the config of one preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim->parsed()) return cmd_simulate(load_spec(config_path, preset_name, out_dir), strict);
        if (semi->parsed()) return cmd_semiwave(mu, a, b, d, tol, profile_out);
        if (sweep->parsed()) return cmd_sweep(load_spec(config_path, preset_name, out_dir), axis1, axis2);
        if (verify->parsed()) {
            std::vector<CheckResult> results;
            try {
                results = run_suite(suite);
            } catch (const ValueError& e) {
                std::cerr << e.what() << '\n';
                return kExitUsage;
            }
            return print_report(results, std::cout) ? kExitOk : kExitVerifyFail;
        }
        if (presets_cmd->parsed()) {
            if (!show.empty()) {
                std::cout << echo_config(preset(show)) << '\n';
            } else {
                for (const std::string& n : preset_names()) std::cout << n << '\n';
            }
            return kExitOk;
        }
    } catch (const SchemaError& e) {
        std::cerr << "config schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValueError& e) {
        std::cerr << "invalid value: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolverError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolverError;
    }
    return kExitUsage;
}
