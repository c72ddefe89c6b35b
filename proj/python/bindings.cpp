#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cesarolab/verify.hpp"

namespace py = pybind11;
using namespace cesarolab;

namespace {

OperatorKind kind_from(const std::string& op) {
    if (op == "cesaro") return OperatorKind::Cesaro;
    if (op == "cesaro-dual") return OperatorKind::CesaroDual;
    throw ParameterError("op must be 'cesaro' or 'cesaro-dual'");
}

Domain domain_from(const std::string& d) {
    if (d == "half-line") return Domain::HalfLine;
    if (d == "real-line") return Domain::RealLine;
    throw ParameterError("domain must be 'half-line' or 'real-line'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "generalized Cesaro operators, Weyl fractional calculus and spectral curves";

    py::register_exception<Error>(m, "CesarolabError");

    // special functions
    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("gamma_ratio", &gamma_ratio, py::arg("z"), py::arg("w"));
    m.def("beta_fn", &beta_fn, py::arg("x"), py::arg("y"));
    m.def("gauss_2f1", &gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("mittag_leffler", &mittag_leffler, py::arg("beta"), py::arg("z"));

    // function model
    py::class_<FnExpr>(m, "FnExpr")
        .def_static("parse", &FnExpr::parse, py::arg("descriptor"))
        .def_static("from_json", &FnExpr::from_json, py::arg("text"))
        .def("to_json", &FnExpr::to_json)
        .def("eval", &FnExpr::eval, py::arg("t"))
        .def("derivative", &FnExpr::derivative_at, py::arg("t"))
        .def("__call__", &FnExpr::eval, py::arg("t"));

    py::class_<GridFn>(m, "GridFn")
        .def("eval", &GridFn::eval, py::arg("t"))
        .def("abscissae", &GridFn::abscissae)
        .def("values", &GridFn::values)
        .def("to_csv", &GridFn::to_csv)
        .def("to_json", &GridFn::to_json);

    // operators; QuadSpec defaults are used throughout
    m.def(
        "apply",
        [](const std::string& op, double beta, const std::string& domain, double p,
           const FnExpr& f, double t) {
            QuadSpec q;
            OperatorSpec spec{kind_from(op), beta, domain_from(domain), p};
            OperatorInput in = OperatorInput::from(f);
            return (spec.kind == OperatorKind::Cesaro) ? cesaro_apply(spec, in, t, q)
                                                       : cesaro_dual_apply(spec, in, t, q);
        },
        py::arg("op"), py::arg("beta"), py::arg("domain"), py::arg("p"), py::arg("f"),
        py::arg("t"));
    m.def(
        "subordination",
        [](const std::string& op, double beta, double p, const FnExpr& f, double t) {
            QuadSpec q;
            OperatorSpec spec{kind_from(op), beta, Domain::HalfLine, p};
            OperatorInput in = OperatorInput::from(f);
            return (spec.kind == OperatorKind::Cesaro)
                       ? cesaro_subordination(spec, in, t, q)
                       : cesaro_dual_subordination(spec, in, t, q);
        },
        py::arg("op"), py::arg("beta"), py::arg("p"), py::arg("f"), py::arg("t"));
    m.def(
        "resolvent",
        [](Complex mu, double p, const FnExpr& f, double t, bool reversed) {
            QuadSpec q;
            return resolvent_apply(mu, p, OperatorInput::from(f), t, q, reversed);
        },
        py::arg("mu"), py::arg("p"), py::arg("f"), py::arg("t"), py::arg("reversed") = false);
    m.def(
        "composition",
        [](double alpha, double beta, const FnExpr& f, double t) {
            QuadSpec q;
            return composition_apply(alpha, beta, OperatorInput::from(f), t, q);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("f"), py::arg("t"));
    m.def("generator", &generator_apply, py::arg("p"), py::arg("f"), py::arg("t"));

    // Sobolev machinery
    m.def(
        "sobolev_norm",
        [](const FnExpr& f, double alpha, double p, const std::string& domain) {
            QuadSpec q;
            SobolevParams sob{alpha, p, domain_from(domain)};
            return sobolev_norm(f, sob, q);
        },
        py::arg("f"), py::arg("alpha"), py::arg("p"), py::arg("domain") = "half-line");
    m.def(
        "pairing",
        [](const FnExpr& f, const FnExpr& g, double alpha) {
            QuadSpec q;
            return pairing(f, g, alpha, q);
        },
        py::arg("f"), py::arg("g"), py::arg("alpha"));
    m.def(
        "weyl_plus",
        [](const FnExpr& f, double alpha, double t) {
            QuadSpec q;
            return weyl_plus_at(f, alpha, t, q);
        },
        py::arg("f"), py::arg("alpha"), py::arg("t"));
    m.def(
        "weyl_zero",
        [](const FnExpr& f, double alpha, double t) {
            QuadSpec q;
            return weyl_zero_at(f, alpha, t, q);
        },
        py::arg("f"), py::arg("alpha"), py::arg("t"));

    // spectra
    m.def(
        "operator_norm",
        [](const std::string& op, double beta, double p) {
            return operator_norm(OperatorSpec{kind_from(op), beta, Domain::HalfLine, p});
        },
        py::arg("op"), py::arg("beta"), py::arg("p"));
    m.def(
        "spectral_curve",
        [](const std::string& op, double beta, double p, double t_min, double t_max, int n) {
            OperatorSpec spec{kind_from(op), beta, Domain::HalfLine, p};
            SpectrumCurve c = spectral_curve(spec, t_min, t_max, n);
            return py::make_tuple(c.params, c.points);
        },
        py::arg("op"), py::arg("beta"), py::arg("p"), py::arg("t_min") = -40.0,
        py::arg("t_max") = 40.0, py::arg("n") = 1601);
    m.def(
        "circle_deviation",
        [](const std::string& op, double p, double t_min, double t_max, int n) {
            OperatorSpec spec{kind_from(op), 1.0, Domain::HalfLine, p};
            return circle_check(spectral_curve(spec, t_min, t_max, n));
        },
        py::arg("op"), py::arg("p"), py::arg("t_min") = -20.0, py::arg("t_max") = 20.0,
        py::arg("n") = 401);
    m.def(
        "group_action_eval",
        [](double t, double p, const FnExpr& f, double s) {
            return group_action(GroupElement{t, p}, f).eval(s);
        },
        py::arg("t"), py::arg("p"), py::arg("f"), py::arg("s"));
    m.def(
        "empirical_norm_ratio",
        [](const std::string& op, double beta, double p, const FnExpr& f, double alpha) {
            QuadSpec q;
            OperatorSpec spec{kind_from(op), beta, Domain::HalfLine, p};
            SobolevParams sob{alpha, p, Domain::HalfLine};
            return empirical_norm_ratio(spec, f, sob, q);
        },
        py::arg("op"), py::arg("beta"), py::arg("p"), py::arg("f"), py::arg("alpha") = 0.0);

    // fourier
    m.def(
        "fourier_transform",
        [](const FnExpr& f, double t) {
            QuadSpec q;
            return fourier_transform_at(f, t, q);
        },
        py::arg("f"), py::arg("t"));
    m.def(
        "cesaro_intertwine_residual",
        [](double beta, const FnExpr& f, const std::string& direction) {
            QuadSpec q;
            IntertwineDirection dir = (direction == "dual") ? IntertwineDirection::Dual
                                                            : IntertwineDirection::Forward;
            return verify_cesaro_intertwine(beta, f, dir, q);
        },
        py::arg("beta"), py::arg("f"), py::arg("direction") = "forward");

    // verification suites
    m.def(
        "run_suite",
        [](const std::string& suite) {
            QuadSpec q;
            std::vector<CheckResult> checks = run_suite(suite, q);
            py::list out;
            for (const CheckResult& c : checks) {
                py::dict d;
                d["name"] = c.name;
                d["residual"] = c.residual;
                d["tolerance"] = c.tolerance;
                d["pass"] = c.pass;
                d["paper_ref"] = c.ref;
                if (!c.error.empty()) d["error"] = c.error;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"));
}
