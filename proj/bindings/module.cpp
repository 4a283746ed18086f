#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbcd/analysis.hpp"
#include "fbcd/runspec.hpp"
#include "fbcd/semiwave.hpp"
#include "fbcd/solver.hpp"

namespace py = pybind11;
using namespace fbcd;

PYBIND11_MODULE(_fbcd, m) {
    m.doc() = "free-boundary competition-diffusion laboratory";

    py::register_exception<Error>(m, "FbcdError");

    py::class_<Params>(m, "Params")
        .def(py::init<>())
        .def_readwrite("d1", &Params::d1)
        .def_readwrite("d2", &Params::d2)
        .def_readwrite("r1", &Params::r1)
        .def_readwrite("r2", &Params::r2)
        .def_readwrite("k", &Params::k)
        .def_readwrite("h", &Params::h)
        .def_readwrite("mu1", &Params::mu1)
        .def_readwrite("mu2", &Params::mu2)
        .def("validate", &Params::validate);

    py::class_<SemiWaveParams>(m, "SemiWaveParams")
        .def(py::init<double, double, double, double>(), py::arg("mu"), py::arg("a"),
             py::arg("b"), py::arg("d"))
        .def_readonly("mu", &SemiWaveParams::mu)
        .def_readonly("a", &SemiWaveParams::a)
        .def_readonly("b", &SemiWaveParams::b)
        .def_readonly("d", &SemiWaveParams::d)
        .def("c_max", &SemiWaveParams::c_max);

    py::class_<SemiWave>(m, "SemiWave")
        .def_readonly("c", &SemiWave::c)
        .def_readonly("y_grid", &SemiWave::y_grid)
        .def_readonly("q", &SemiWave::q)
        .def_readonly("residual", &SemiWave::residual);

    m.def("solve_semiwave",
          py::overload_cast<const SemiWaveParams&, double>(&solve_semiwave), py::arg("params"),
          py::arg("tol") = 1e-8);

    py::class_<RegionAResult>(m, "RegionAResult")
        .def_readonly("in_A", &RegionAResult::in_A)
        .def_readonly("gap_below_resolution", &RegionAResult::gap_below_resolution)
        .def_readonly("c1_reduced", &RegionAResult::c1_reduced)
        .def_readonly("c2_free", &RegionAResult::c2_free)
        .def("__bool__", [](const RegionAResult& r) { return r.in_A; });
    m.def("in_region_A", &in_region_A, py::arg("params"), py::arg("tol") = 1e-6);

    py::class_<InitialData>(m, "InitialData")
        .def(py::init<>())
        .def_readwrite("s1_0", &InitialData::s1_0)
        .def_readwrite("s2_0", &InitialData::s2_0)
        .def_readwrite("u0", &InitialData::u0)
        .def_readwrite("v0", &InitialData::v0);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("n_xi", &GridSpec::n_xi)
        .def_readwrite("dt", &GridSpec::dt)
        .def_readwrite("t_end", &GridSpec::t_end)
        .def_readwrite("snapshot_stride", &GridSpec::snapshot_stride);

    py::class_<ProfileSnapshot>(m, "ProfileSnapshot")
        .def_readonly("t", &ProfileSnapshot::t)
        .def_readonly("u", &ProfileSnapshot::u)
        .def_readonly("v", &ProfileSnapshot::v)
        .def_readonly("s1", &ProfileSnapshot::s1)
        .def_readonly("s2", &ProfileSnapshot::s2);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("t", &Trajectory::t)
        .def_readonly("s1", &Trajectory::s1)
        .def_readonly("s2", &Trajectory::s2)
        .def_readonly("s1dot", &Trajectory::s1dot)
        .def_readonly("s2dot", &Trajectory::s2dot)
        .def_readonly("u_origin", &Trajectory::u_origin)
        .def_readonly("v_origin", &Trajectory::v_origin)
        .def_readonly("u_max", &Trajectory::u_max)
        .def_readonly("v_max", &Trajectory::v_max)
        .def_readonly("profiles", &Trajectory::profiles)
        .def_readonly("watchdog_fired", &Trajectory::watchdog_fired);

    m.def("run", &run, py::arg("params"), py::arg("init"), py::arg("grid"));
    m.def("cosine_profile", &cosine_profile, py::arg("amp"), py::arg("n"));
    m.def("bump_profile", &bump_profile, py::arg("amp"), py::arg("n"));

    py::class_<Thresholds>(m, "Thresholds")
        .def_readonly("s1_star", &Thresholds::s1_star)
        .def_readonly("s2_star", &Thresholds::s2_star)
        .def_readonly("s1_tilde", &Thresholds::s1_tilde)
        .def_readonly("s2_tilde", &Thresholds::s2_tilde);
    m.def("thresholds", &thresholds, py::arg("params"));
    m.def("coexistence_limits", &coexistence_limits, py::arg("k"), py::arg("h"));

    py::class_<IterationBounds>(m, "IterationBounds")
        .def_readonly("u_lower", &IterationBounds::u_lower)
        .def_readonly("v_upper", &IterationBounds::v_upper)
        .def_readonly("converged", &IterationBounds::converged);
    m.def("iteration_bounds", &iteration_bounds, py::arg("k"), py::arg("h"), py::arg("n"));

    py::enum_<Label>(m, "Label")
        .value("Spreading", Label::Spreading)
        .value("Vanishing", Label::Vanishing)
        .value("Indeterminate", Label::Indeterminate);

    py::class_<SpeciesOutcome>(m, "SpeciesOutcome")
        .def_readonly("label", &SpeciesOutcome::label)
        .def_readonly("final_front", &SpeciesOutcome::final_front)
        .def_readonly("final_max", &SpeciesOutcome::final_max)
        .def_readonly("slope", &SpeciesOutcome::slope)
        .def_readonly("drift", &SpeciesOutcome::drift);
    py::class_<Outcome>(m, "Outcome")
        .def_readonly("species1", &Outcome::species1)
        .def_readonly("species2", &Outcome::species2);
    m.def(
        "classify",
        [](const Trajectory& traj, const Thresholds& thr, double vanish_tol, double slope_floor,
           double window_fraction) {
            ClassifyCriteria crit;
            crit.vanish_tol = vanish_tol;
            crit.slope_floor = slope_floor;
            crit.window_fraction = window_fraction;
            return classify(traj, thr, crit);
        },
        py::arg("traj"), py::arg("thresholds"), py::arg("vanish_tol") = 1e-4,
        py::arg("slope_floor") = 1e-3, py::arg("window_fraction") = 0.3);

    py::class_<FrontFit>(m, "FrontFit")
        .def_readonly("slope", &FrontFit::slope)
        .def_readonly("drift", &FrontFit::drift)
        .def_readonly("rms_residual", &FrontFit::rms_residual);
    m.def("fit_front_speed", &fit_front_speed, py::arg("traj"), py::arg("species"),
          py::arg("window_fraction") = 0.3);

    py::class_<Thm6Certificate>(m, "Thm6Certificate")
        .def_readonly("K", &Thm6Certificate::K)
        .def_readonly("sigma_bar", &Thm6Certificate::sigma_bar)
        .def_readonly("mu1_bar", &Thm6Certificate::mu1_bar)
        .def_readonly("L_of_mu1", &Thm6Certificate::L_of_mu1)
        .def_readonly("ell_sigma", &Thm6Certificate::ell_sigma)
        .def_readonly("delta_sigma", &Thm6Certificate::delta_sigma)
        .def_readonly("holds", &Thm6Certificate::holds);
    m.def("thm6_certificate", &thm6_certificate, py::arg("params"), py::arg("init"));

    m.def("eigen_length", &eigen_length, py::arg("d2"), py::arg("r2"), py::arg("sigma"),
          py::arg("lam"));
    m.def("thm7_delta_max", &thm7_delta_max, py::arg("c_sigma"), py::arg("d2"), py::arg("r2"),
          py::arg("k"), py::arg("h"));

    m.def("preset_names", &preset_names);
    m.def(
        "preset_config", [](const std::string& name) { return echo_config(preset(name)); },
        py::arg("name"));
}
