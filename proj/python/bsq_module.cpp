#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsq/forward_map.hpp"
#include "bsq/inverse.hpp"
#include "bsq/spectrum.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace py = pybind11;
using namespace bsq;

namespace {

OdeOptions ode_opts(double rtol) {
    OdeOptions o;
    o.rtol = rtol;
    return o;
}

} // namespace

PYBIND11_MODULE(_bsq, m) {
    m.doc() = "Forward and inverse spectral maps for the third-order periodic "
              "operator of the good Boussinesq equation";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

    py::class_<TrigSeries>(m, "TrigSeries")
        .def(py::init<std::vector<double>, std::vector<double>>(),
             py::arg("cos_coeffs"), py::arg("sin_coeffs"))
        .def_static("zero", &TrigSeries::zero, py::arg("modes"))
        .def_static("cosine", &TrigSeries::cosine, py::arg("m"), py::arg("amplitude"))
        .def_static("sine", &TrigSeries::sine, py::arg("m"), py::arg("amplitude"))
        .def("__call__", &TrigSeries::operator(), py::arg("x"))
        .def_property_readonly("modes", &TrigSeries::modes)
        .def_property_readonly("cos_coeffs", &TrigSeries::cos_coeffs)
        .def_property_readonly("sin_coeffs", &TrigSeries::sin_coeffs)
        .def("fourier_cos", &TrigSeries::fourier_cos, py::arg("n"))
        .def("fourier_sin", &TrigSeries::fourier_sin, py::arg("n"))
        .def("norm_l2", &TrigSeries::norm_l2)
        .def("derivative", &TrigSeries::derivative);

    py::class_<CoefficientPair>(m, "CoefficientPair")
        .def(py::init([](const TrigSeries& p, const TrigSeries& q) {
                 return CoefficientPair{p, q};
             }),
             py::arg("p"), py::arg("q"))
        .def_readwrite("p", &CoefficientPair::p)
        .def_readwrite("q", &CoefficientPair::q)
        .def("norm", &CoefficientPair::norm)
        .def("norm1", &CoefficientPair::norm1)
        .def("star", &CoefficientPair::star)
        .def("reflect", &CoefficientPair::reflect)
        .def_property_readonly("modes", &CoefficientPair::modes);

    m.def("random_in_ball", &random_in_ball, py::arg("radius"), py::arg("modes"),
          py::arg("seed"),
          "Deterministic random coefficient pair with ||u||_1 = radius");

    py::class_<SpectralEntry>(m, "SpectralEntry")
        .def(py::init([](int n, double h_c, double h_s) {
                 return SpectralEntry{n, h_c, h_s};
             }),
             py::arg("n"), py::arg("h_c"), py::arg("h_s"))
        .def_readwrite("n", &SpectralEntry::n)
        .def_readwrite("h_c", &SpectralEntry::h_c)
        .def_readwrite("h_s", &SpectralEntry::h_s)
        .def("__repr__", [](const SpectralEntry& e) {
            return "SpectralEntry(n=" + std::to_string(e.n) +
                   ", h_c=" + std::to_string(e.h_c) +
                   ", h_s=" + std::to_string(e.h_s) + ")";
        });

    py::class_<SpectralData>(m, "SpectralData")
        .def_static("zeros", &SpectralData::zeros, py::arg("N"))
        .def_readwrite("N", &SpectralData::N)
        .def_readwrite("entries", &SpectralData::entries)
        .def("at", [](const SpectralData& d, int n) { return d.at(n); }, py::arg("n"))
        .def("norm", &SpectralData::norm)
        .def("__sub__", [](const SpectralData& a, const SpectralData& b) { return a - b; });

    py::class_<EigenvalueRecord>(m, "EigenvalueRecord")
        .def_readonly("n", &EigenvalueRecord::n)
        .def_readonly("mu", &EigenvalueRecord::mu)
        .def_readonly("residual", &EigenvalueRecord::residual)
        .def_readonly("newton_iters", &EigenvalueRecord::newton_iters)
        .def_readonly("disc_margin", &EigenvalueRecord::disc_margin);

    py::class_<InversionReport>(m, "InversionReport")
        .def_readonly("converged", &InversionReport::converged)
        .def_readonly("iterations", &InversionReport::iterations)
        .def_readonly("residual_history", &InversionReport::residual_history)
        .def_readonly("final_u", &InversionReport::final_u)
        .def_readonly("ball_violations", &InversionReport::ball_violations);

    m.def(
        "eigenvalue",
        [](const CoefficientPair& u, int n, double rtol) {
            return eigenvalue(u, n, ode_opts(rtol));
        },
        py::arg("u"), py::arg("n"), py::arg("rtol") = 1e-13,
        "Three-point eigenvalue mu_n near iota_n = (2 nu n)^3");

    m.def(
        "forward",
        [](const CoefficientPair& u, int N, double rtol) {
            return forward(u, N, ode_opts(rtol));
        },
        py::arg("u"), py::arg("N"), py::arg("rtol") = 1e-13,
        "Forward spectral map h(u) for modes |n| <= N");

    m.def(
        "h_cn",
        [](const CoefficientPair& u, int n, double rtol) {
            return h_cn(u, n, ode_opts(rtol));
        },
        py::arg("u"), py::arg("n"), py::arg("rtol") = 1e-13);
    m.def(
        "h_sn",
        [](const CoefficientPair& u, int n, double rtol) {
            return h_sn(u, n, ode_opts(rtol));
        },
        py::arg("u"), py::arg("n"), py::arg("rtol") = 1e-13);

    m.def("f_apply", &F_apply, py::arg("u"), py::arg("N"),
          "Linearization F = dh(0) applied to u");
    m.def("f_inverse", &F_inverse, py::arg("data"),
          "Inverse of the linear isomorphism F");

    m.def(
        "invert",
        [](const SpectralData& data, double tol, int max_iters, const std::string& mode,
           double ball_radius, double rtol) {
            InvertOptions o;
            if (mode == "quasi")
                o.mode = InvertMode::quasi;
            else if (mode == "full")
                o.mode = InvertMode::full;
            else
                throw UsageError("invert: mode must be 'quasi' or 'full'");
            o.tol = tol;
            o.max_iters = max_iters;
            o.ball_radius = ball_radius;
            o.ode = ode_opts(rtol);
            return invert(data, o);
        },
        py::arg("data"), py::arg("tol") = 1e-10, py::arg("max_iters") = 50,
        py::arg("mode") = "quasi", py::arg("ball_radius") = 0.1,
        py::arg("rtol") = 1e-13,
        "Recover coefficients from spectral data by the F-preconditioned "
        "quasi-Newton iteration");
}
