#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jt/asymptotics.hpp"
#include "jt/poincare.hpp"
#include "jt/slowfast.hpp"
#include "jt/tongues.hpp"

namespace py = pybind11;
using namespace jt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rotation numbers and Arnold tongues of the Josephson equation";

    py::register_exception<StepUnderflow>(m, "StepUnderflowError", PyExc_RuntimeError);
    py::register_exception<DegenerateFit>(m, "DegenerateFitError", PyExc_RuntimeError);

    py::class_<Params>(m, "Params")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("mu"))
        .def_readwrite("a", &Params::a)
        .def_readwrite("b", &Params::b)
        .def_readwrite("mu", &Params::mu)
        .def("__repr__", [](const Params& p) {
            return "Params(a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) +
                   ", mu=" + std::to_string(p.mu) + ")";
        });

    py::class_<State>(m, "State")
        .def(py::init<double, double>(), py::arg("x"), py::arg("t"))
        .def_readwrite("x", &State::x)
        .def_readwrite("t", &State::t);

    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &IntegratorConfig::rel_tol)
        .def_readwrite("abs_tol", &IntegratorConfig::abs_tol)
        .def_readwrite("max_step", &IntegratorConfig::max_step)
        .def_readwrite("min_step", &IntegratorConfig::min_step);

    py::class_<LiftedTrajectory>(m, "Trajectory")
        .def_readonly("t_grid", &LiftedTrajectory::t_grid)
        .def_readonly("x_values", &LiftedTrajectory::x_values)
        .def_readonly("u_a", &LiftedTrajectory::u_a)
        .def_readonly("u_b", &LiftedTrajectory::u_b)
        .def("x", &LiftedTrajectory::x, py::arg("t"))
        .def("u_a_at", &LiftedTrajectory::u_a_at, py::arg("t"))
        .def("u_b_at", &LiftedTrajectory::u_b_at, py::arg("t"))
        .def_property_readonly("x_end", &LiftedTrajectory::x_end);

    py::enum_<MapClass>(m, "MapClass")
        .value("Elliptic", MapClass::Elliptic)
        .value("Parabolic", MapClass::Parabolic)
        .value("Hyperbolic", MapClass::Hyperbolic)
        .value("Identity", MapClass::Identity);

    py::enum_<RotationMethod>(m, "RotationMethod")
        .value("mobius", RotationMethod::mobius)
        .value("direct", RotationMethod::direct);

    py::class_<MobiusMap>(m, "MobiusMap")
        .def_property_readonly("matrix",
                               [](const MobiusMap& mm) {
                                   return std::vector<std::vector<double>>{
                                       {mm.m[0][0], mm.m[0][1]}, {mm.m[1][0], mm.m[1][1]}};
                               })
        .def_readonly("winding", &MobiusMap::winding)
        .def_readonly("fit_residual", &MobiusMap::fit_residual)
        .def("trace", &MobiusMap::trace)
        .def("det", &MobiusMap::det)
        .def("circle_image", &MobiusMap::circle_image, py::arg("x"))
        .def("lift", &MobiusMap::lift, py::arg("x"));

    py::class_<RotationResult>(m, "RotationResult")
        .def_readonly("rho", &RotationResult::rho)
        .def_readonly("method", &RotationResult::method)
        .def_readonly("error_bound", &RotationResult::error_bound)
        .def_readonly("map_class", &RotationResult::map_class);

    py::enum_<Side>(m, "Side").value("zero", Side::zero).value("pi", Side::pi_);

    py::enum_<TraceDirection>(m, "TraceDirection")
        .value("forward", TraceDirection::forward)
        .value("backward", TraceDirection::backward)
        .value("automatic", TraceDirection::automatic);

    py::class_<TraceConfig>(m, "TraceConfig")
        .def(py::init<>())
        .def_readwrite("h", &TraceConfig::h)
        .def_readwrite("newton_tol", &TraceConfig::newton_tol)
        .def_readwrite("max_newton_iters", &TraceConfig::max_newton_iters)
        .def_readwrite("bisection_bracket", &TraceConfig::bisection_bracket)
        .def_readwrite("time_direction", &TraceConfig::time_direction)
        .def_readwrite("integ", &TraceConfig::integ);

    py::class_<BoundarySample>(m, "BoundarySample")
        .def_readonly("b", &BoundarySample::b)
        .def_readonly("a", &BoundarySample::a)
        .def_readonly("residual", &BoundarySample::residual)
        .def_readonly("steps_used", &BoundarySample::steps_used)
        .def_property_readonly("method",
                               [](const BoundarySample& s) {
                                   return s.method == SampleMethod::newton ? "newton"
                                                                           : "bisection";
                               })
        .def_readonly("backward", &BoundarySample::backward);

    py::class_<BoundaryCurve>(m, "BoundaryCurve")
        .def_readonly("k", &BoundaryCurve::k)
        .def_readonly("side", &BoundaryCurve::side)
        .def_readonly("mu", &BoundaryCurve::mu)
        .def_readonly("samples", &BoundaryCurve::samples)
        .def_readonly("complete", &BoundaryCurve::complete)
        .def_readonly("failure", &BoundaryCurve::failure);

    py::class_<Bridge>(m, "Bridge")
        .def_readonly("k", &Bridge::k)
        .def_readonly("b_star", &Bridge::b_star)
        .def_readonly("a_star", &Bridge::a_star)
        .def_readonly("defect_zero", &Bridge::defect_zero)
        .def_readonly("defect_pi", &Bridge::defect_pi);

    py::class_<BesselEval>(m, "BesselEval")
        .def_readonly("k", &BesselEval::k)
        .def_readonly("z", &BesselEval::z)
        .def_readonly("value", &BesselEval::value)
        .def_readonly("quadrature_error", &BesselEval::quadrature_error);

    py::class_<ScanPoint>(m, "ScanPoint")
        .def_readonly("b", &ScanPoint::b)
        .def_readonly("residual_zero", &ScanPoint::residual_zero)
        .def_readonly("residual_pi", &ScanPoint::residual_pi);

    py::class_<ResidualScan>(m, "ResidualScan")
        .def_readonly("points", &ResidualScan::points)
        .def_readonly("fitted_exponent", &ResidualScan::fitted_exponent);

    py::enum_<Region>(m, "Region")
        .value("A", Region::A)
        .value("B", Region::B)
        .value("C", Region::C)
        .value("CPrime", Region::CPrime)
        .value("Boundary", Region::Boundary);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("t", &CurvePoint::t)
        .def_readonly("x", &CurvePoint::x);

    py::class_<SlowCurveComponent>(m, "SlowCurveComponent")
        .def_readonly("points", &SlowCurveComponent::points)
        .def_readonly("contractible", &SlowCurveComponent::contractible)
        .def_readonly("winding_t", &SlowCurveComponent::winding_t)
        .def_readonly("winding_x", &SlowCurveComponent::winding_x);

    py::class_<SlowCurve>(m, "SlowCurve")
        .def_readonly("region", &SlowCurve::region)
        .def_readonly("components", &SlowCurve::components)
        .def_readonly("folds", &SlowCurve::folds);

    m.def("vector_field", &vector_field, py::arg("state"), py::arg("params"));
    m.def("reflect", &reflect, py::arg("state"));
    m.def("integrate", &integrate, py::arg("params"), py::arg("x0"), py::arg("t0"),
          py::arg("t1"), py::arg("cfg") = IntegratorConfig{});
    m.def("integrate_with_variations", &integrate_with_variations, py::arg("params"),
          py::arg("x0"), py::arg("t0"), py::arg("t1"), py::arg("cfg") = IntegratorConfig{});
    m.def("poincare_lift", &poincare_lift, py::arg("params"), py::arg("x0"),
          py::arg("cfg") = IntegratorConfig{});
    m.def("fit_mobius",
          [](const Params& p) { return fit_mobius(p); }, py::arg("params"));
    m.def("classify", &classify, py::arg("map"), py::arg("parabolic_tol") = 1e-7,
          py::arg("identity_tol") = 1e-6);
    m.def("rotation_number",
          [](const Params& p, RotationMethod method) { return rotation_number(p, method); },
          py::arg("params"), py::arg("method") = RotationMethod::mobius);
    m.def("half_period_value",
          [](const Params& p, double x0) { return half_period_value(p, x0); },
          py::arg("params"), py::arg("x0"));
    m.def("boundary_condition",
          [](const Params& p, int k, Side side) { return boundary_condition(p, k, side); },
          py::arg("params"), py::arg("k"), py::arg("side"));
    m.def("initial_a", &initial_a, py::arg("k"), py::arg("mu"));
    m.def("validated_initial_a",
          [](int k, Side side, double mu) { return validated_initial_a(k, side, mu); },
          py::arg("k"), py::arg("side"), py::arg("mu"));
    m.def("trace_boundary", &trace_boundary, py::arg("k"), py::arg("side"), py::arg("mu"),
          py::arg("b_max"), py::arg("cfg") = TraceConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("find_bridges", &find_bridges, py::arg("k"), py::arg("mu"), py::arg("b_max"),
          py::arg("cfg") = TraceConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("tongue_gap", &tongue_gap, py::arg("k"), py::arg("mu"), py::arg("b"),
          py::arg("cfg") = TraceConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("bessel_j", &bessel_j, py::arg("k"), py::arg("z"));
    m.def("boundary_asymptote", &boundary_asymptote, py::arg("k"), py::arg("mu"),
          py::arg("b"), py::arg("side"));
    m.def("residual_scan", &residual_scan, py::arg("side_zero"), py::arg("side_pi"),
          py::arg("b_lo"), py::arg("b_hi"), py::arg("n_points"));
    m.def("classify_region", &classify_region, py::arg("a"), py::arg("b"),
          py::arg("tol") = 1e-12);
    m.def("slow_curve", &slow_curve, py::arg("a"), py::arg("b"),
          py::arg("n_samples") = 256);
    m.def("fold_points", &fold_points, py::arg("a"), py::arg("b"));
}
