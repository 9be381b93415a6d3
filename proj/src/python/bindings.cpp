#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandlab/analytic.hpp"
#include "bandlab/io.hpp"
#include "bandlab/kernel.hpp"
#include "bandlab/model.hpp"
#include "bandlab/pde.hpp"
#include "bandlab/verify.hpp"

namespace py = pybind11;
using namespace bandlab;

PYBIND11_MODULE(_bandlab, m) {
    m.doc() = "traveling-band chemotaxis models: closed forms, PDE and "
              "jump-kernel simulation, theorem verification";

    py::register_exception<Error>(m, "BandlabError");

    py::enum_<ModelKind>(m, "ModelKind")
        .value("UnlimitedNoCrowd", ModelKind::UnlimitedNoCrowd)
        .value("UnlimitedCrowd", ModelKind::UnlimitedCrowd)
        .value("LimitedCrowd", ModelKind::LimitedCrowd)
        .value("LimitedNoCrowd", ModelKind::LimitedNoCrowd);

    m.def("kind_from_string", &kind_from_string, py::arg("name"));
    m.def("kind_to_string", [](ModelKind k) { return to_string(k); },
          py::arg("kind"));

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("tau", &ModelParams::tau)
        .def_readonly("mu", &ModelParams::mu)
        .def_readonly("c", &ModelParams::c)
        .def_readonly("beta", &ModelParams::beta)
        .def_readonly("gamma0", &ModelParams::gamma0)
        .def_readonly("k", &ModelParams::k)
        .def_readonly("v_inf", &ModelParams::v_inf)
        .def_readonly("d", &ModelParams::d)
        .def_readonly("gamma", &ModelParams::gamma)
        .def_readonly("alpha", &ModelParams::alpha)
        .def_readonly("B", &ModelParams::B)
        .def_readonly("lambda_plus", &ModelParams::lambda_plus)
        .def_readonly("lambda_minus", &ModelParams::lambda_minus)
        .def_readonly("Q", &ModelParams::Q)
        .def_readonly("Q1", &ModelParams::Q1)
        .def_readonly("Q2", &ModelParams::Q2);

    m.def("derive_params", &derive_params, py::arg("tau"), py::arg("mu"),
          py::arg("c"), py::arg("beta"), py::arg("gamma0"), py::arg("k") = 1.0,
          py::arg("v_inf") = 1.0,
          py::arg("kind") = ModelKind::UnlimitedNoCrowd);
    m.def("crowd_neutral", &crowd_neutral, py::arg("params"));

    py::class_<Profile>(m, "Profile")
        .def_readonly("zeta", &Profile::zeta)
        .def_readonly("u", &Profile::u)
        .def_readonly("v", &Profile::v)
        .def_readonly("kind", &Profile::kind);

    py::class_<UMax>(m, "UMax")
        .def_readonly("zeta_star", &UMax::zeta_star)
        .def_readonly("u_max", &UMax::u_max);

    py::class_<Asymptotics>(m, "Asymptotics")
        .def_readonly("u_minus_inf", &Asymptotics::u_minus_inf)
        .def_readonly("u_plus_inf", &Asymptotics::u_plus_inf)
        .def_readonly("v_minus_inf", &Asymptotics::v_minus_inf)
        .def_readonly("v_plus_inf", &Asymptotics::v_plus_inf);

    py::class_<BoundPair>(m, "BoundPair")
        .def_readonly("u_minus", &BoundPair::u_minus)
        .def_readonly("u_plus", &BoundPair::u_plus)
        .def_readonly("lambda_minus", &BoundPair::lambda_minus)
        .def_readonly("lambda_plus", &BoundPair::lambda_plus)
        .def_readonly("t", &BoundPair::t);

    m.def("eval_model1", &eval_model1, py::arg("zeta_grid"), py::arg("params"));
    m.def("eval_model3", &eval_model3, py::arg("zeta_grid"), py::arg("params"),
          py::arg("C7") = 1.0);
    m.def("eval_model4", &eval_model4, py::arg("zeta_grid"), py::arg("params"));
    m.def("umax_model1", &umax_model1, py::arg("params"));
    m.def("bounds_model2", &bounds_model2, py::arg("baseline"), py::arg("t"),
          py::arg("params"));
    m.def("asymptotics", &asymptotics, py::arg("kind"), py::arg("params"));
    m.def("linspace", &linspace, py::arg("lo"), py::arg("hi"), py::arg("n"));

    py::class_<Grid1D>(m, "Grid1D")
        .def_readonly("x_min", &Grid1D::x_min)
        .def_readonly("x_max", &Grid1D::x_max)
        .def_readonly("n", &Grid1D::n)
        .def("dx", &Grid1D::dx);
    m.def("make_grid", &make_grid, py::arg("x_min"), py::arg("x_max"),
          py::arg("n"));

    py::class_<FieldState>(m, "FieldState")
        .def_readonly("grid", &FieldState::grid)
        .def_readonly("t", &FieldState::t)
        .def_readonly("u", &FieldState::u)
        .def_readonly("v", &FieldState::v);

    py::enum_<InitKind>(m, "InitKind")
        .value("Analytic", InitKind::Analytic)
        .value("Step", InitKind::Step)
        .value("GaussianBump", InitKind::GaussianBump);

    py::class_<InitSpec>(m, "InitSpec")
        .def(py::init<>())
        .def_readwrite("kind", &InitSpec::kind)
        .def_readwrite("mass", &InitSpec::mass)
        .def_readwrite("center", &InitSpec::center)
        .def_readwrite("width", &InitSpec::width);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("dt", &SolverConfig::dt)
        .def_readwrite("t_end", &SolverConfig::t_end)
        .def_readwrite("v_floor", &SolverConfig::v_floor)
        .def_readwrite("snapshot_every", &SolverConfig::snapshot_every);

    m.def("cfl_dt", &cfl_dt, py::arg("grid"), py::arg("params"));
    m.def("init_state", &init_state, py::arg("grid"), py::arg("kind"),
          py::arg("params"), py::arg("init") = InitSpec{},
          py::arg("v_floor") = 1e-12);
    m.def("step", &step, py::arg("state"), py::arg("kind"), py::arg("params"),
          py::arg("config"));
    m.def("run", &run, py::arg("state"), py::arg("kind"), py::arg("params"),
          py::arg("config"));
    m.def("measure_front_speed", &measure_front_speed, py::arg("snapshots"),
          py::arg("level"), py::arg("params"));

    py::class_<KernelSpec>(m, "KernelSpec")
        .def(py::init<>())
        .def_readwrite("truncation_sigmas", &KernelSpec::truncation_sigmas)
        .def_readwrite("v_floor", &KernelSpec::v_floor);

    m.def("kernel_step", &kernel_step, py::arg("state"), py::arg("params"),
          py::arg("spec"), py::arg("kind"));
    m.def("kernel_run", &kernel_run, py::arg("state"), py::arg("params"),
          py::arg("spec"), py::arg("kind"), py::arg("t_end"),
          py::arg("snapshot_every") = 0);

    py::enum_<DerivMode>(m, "DerivMode")
        .value("Analytic", DerivMode::Analytic)
        .value("FiniteDifference", DerivMode::FiniteDifference);

    py::class_<ResidualNorms>(m, "ResidualNorms")
        .def_readonly("u_linf", &ResidualNorms::u_linf)
        .def_readonly("u_l2", &ResidualNorms::u_l2)
        .def_readonly("v_linf", &ResidualNorms::v_linf)
        .def_readonly("v_l2", &ResidualNorms::v_l2)
        .def("worst", &ResidualNorms::worst);

    m.def("ode_residual", &ode_residual, py::arg("profile"), py::arg("kind"),
          py::arg("params"), py::arg("mode") = DerivMode::FiniteDifference,
          py::arg("C7") = 1.0);
    m.def("max_ln_v_curvature", &max_ln_v_curvature, py::arg("profile"));
    m.def("convergence_order", &convergence_order, py::arg("error_pairs"));

    m.def("params_to_json",
          [](const ModelParams& p, ModelKind kind) {
              return params_to_json(p, kind);
          },
          py::arg("params"), py::arg("kind"));
    m.def("params_from_json", &params_from_json, py::arg("text"));
    m.def("profile_to_csv", &profile_to_csv, py::arg("profile"),
          py::arg("normalized_columns") = true, py::arg("scaled_zeta") = false);
}
