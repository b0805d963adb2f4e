#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptsqw/oracle.hpp"
#include "ptsqw/pwell.hpp"
#include "ptsqw/xwell.hpp"

namespace py = pybind11;
using namespace ptsqw;

PYBIND11_MODULE(_ptsqw, m) {
  m.doc() = "Spectra of exactly solvable PT-symmetric square-well models";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<EmptyInterval>(m, "EmptyInterval", PyExc_ValueError);
  py::register_exception<InvalidBracket>(m, "InvalidBracket", PyExc_ValueError);
  py::register_exception<NonFiniteEvaluation>(m, "NonFiniteEvaluation", PyExc_ArithmeticError);
  py::register_exception<NoInteriorExtremum>(m, "NoInteriorExtremum", PyExc_ValueError);
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", PyExc_RuntimeError);
  py::register_exception<TangentPole>(m, "TangentPole", PyExc_ArithmeticError);
  py::register_exception<OutOfRegime>(m, "OutOfRegime", PyExc_ValueError);
  py::register_exception<NotAnEigenvalue>(m, "NotAnEigenvalue", PyExc_ValueError);
  py::register_exception<NoBirthInInterval>(m, "NoBirthInInterval", PyExc_RuntimeError);
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_RuntimeError);

  py::class_<num::PrecisionPolicy>(m, "PrecisionPolicy")
      .def(py::init<>())
      .def(py::init([](int digits, int scan_points, double root_tol, double residual_tol,
                       int max_digits) {
             num::PrecisionPolicy p{digits, scan_points, root_tol, residual_tol, max_digits};
             p.validate();
             return p;
           }),
           py::arg("digits") = 16, py::arg("scan_points") = 512, py::arg("root_tol") = 1e-12,
           py::arg("residual_tol") = 1e-10, py::arg("max_digits") = 120)
      .def_readwrite("digits", &num::PrecisionPolicy::digits)
      .def_readwrite("scan_points", &num::PrecisionPolicy::scan_points)
      .def_readwrite("root_tol", &num::PrecisionPolicy::root_tol)
      .def_readwrite("residual_tol", &num::PrecisionPolicy::residual_tol)
      .def_readwrite("max_digits", &num::PrecisionPolicy::max_digits)
      .def("adaptive", &num::PrecisionPolicy::adaptive)
      .def("__repr__", [](const num::PrecisionPolicy& p) {
        return "PrecisionPolicy(digits=" + std::to_string(p.digits) +
               ", scan_points=" + std::to_string(p.scan_points) +
               ", max_digits=" + std::to_string(p.max_digits) + ")";
      });

  // ---- coordinate model ----
  auto xw = m.def_submodule("xwell", "imaginary square well in coordinate representation");

  py::enum_<xwell::Parity>(xw, "Parity")
      .value("plus", xwell::Parity::plus)
      .value("minus", xwell::Parity::minus);

  py::class_<xwell::Level>(xw, "Level")
      .def_readonly("N", &xwell::Level::N)
      .def_readonly("parity", &xwell::Level::parity)
      .def_readonly("omega", &xwell::Level::omega)
      .def_readonly("alpha", &xwell::Level::alpha)
      .def_readonly("k", &xwell::Level::k)
      .def_readonly("p_decay", &xwell::Level::p_decay)
      .def_readonly("q_osc", &xwell::Level::q_osc)
      .def_readonly("E", &xwell::Level::E)
      .def_readonly("G", &xwell::Level::G)
      .def_readonly("R_aux", &xwell::Level::R_aux)
      .def("__repr__", [](const xwell::Level& l) {
        return "Level(N=" + std::to_string(l.N) + ", E=" + std::to_string(l.E) + ")";
      });

  py::class_<xwell::WaveFunction>(xw, "WaveFunction")
      .def_readonly("level", &xwell::WaveFunction::level)
      .def_readonly("B_imag", &xwell::WaveFunction::B_imag)
      .def_readonly("L_out", &xwell::WaveFunction::L_out)
      .def_readonly("N_out", &xwell::WaveFunction::N_out)
      .def_readonly("sigma_re", &xwell::WaveFunction::sigma_re)
      .def_readonly("sigma_im", &xwell::WaveFunction::sigma_im)
      .def("__call__", &xwell::WaveFunction::operator(), py::arg("x"));

  xw.def("params_from_alpha", &xwell::params_from_alpha, py::arg("alpha"), py::arg("T"));
  xw.def("secular_residual", &xwell::secular_residual, py::arg("omega"), py::arg("N"),
         py::arg("T"));
  xw.def("solve_level", &xwell::solve_level, py::arg("N"), py::arg("T"),
         py::arg("policy") = num::PrecisionPolicy{});
  xw.def("spectrum", &xwell::spectrum, py::arg("T"), py::arg("N_max"),
         py::arg("policy") = num::PrecisionPolicy{});
  xw.def("g_parameter", &xwell::g_parameter, py::arg("level"));
  xw.def("make_wavefunction", &xwell::make_wavefunction, py::arg("level"));
  xw.def("wavefunction", &xwell::wavefunction, py::arg("level"), py::arg("x"));
  xw.def("matching_residual", &xwell::matching_residual, py::arg("level"));
  xw.def("weak_coupling_estimate", &xwell::weak_coupling_estimate, py::arg("N"), py::arg("T"),
         py::arg("terms") = 2);
  xw.def("strong_coupling_estimate", &xwell::strong_coupling_estimate, py::arg("N"), py::arg("T"));
  xw.def("hermitian_box_levels", &xwell::hermitian_box_levels, py::arg("count"));

  // ---- momentum model ----
  auto pw = m.def_submodule("pwell", "third-order momentum-representation square well");

  py::class_<pwell::Params>(pw, "Params")
      .def_readonly("E", &pwell::Params::E)
      .def_readonly("alpha", &pwell::Params::alpha)
      .def_readonly("beta", &pwell::Params::beta)
      .def_readonly("t", &pwell::Params::t)
      .def_readonly("R", &pwell::Params::R);

  py::class_<pwell::Coeffs>(pw, "Coeffs")
      .def_readonly("g", &pwell::Coeffs::g)
      .def_readonly("D", &pwell::Coeffs::D)
      .def_readonly("F", &pwell::Coeffs::F)
      .def_readonly("theta", &pwell::Coeffs::theta)
      .def_readonly("epsilon", &pwell::Coeffs::epsilon)
      .def_readonly("c", &pwell::Coeffs::c)
      .def_readonly("eta", &pwell::Coeffs::eta);

  py::class_<pwell::RootRec>(pw, "RootRec")
      .def_readonly("alpha", &pwell::RootRec::alpha)
      .def_readonly("E", &pwell::RootRec::E)
      .def_readonly("residual", &pwell::RootRec::residual)
      .def("__repr__", [](const pwell::RootRec& r) {
        return "RootRec(alpha=" + std::to_string(r.alpha) + ", E=" + std::to_string(r.E) + ")";
      });

  py::class_<pwell::Peak>(pw, "Peak")
      .def_readonly("alpha", &pwell::Peak::alpha)
      .def_readonly("value", &pwell::Peak::value)
      .def_readonly("digits", &pwell::Peak::digits)
      .def_readonly("resolved", &pwell::Peak::resolved);

  py::class_<pwell::Spectrum>(pw, "Spectrum")
      .def_readonly("Z", &pwell::Spectrum::Z)
      .def_readonly("roots", &pwell::Spectrum::roots)
      .def_readonly("peak", &pwell::Spectrum::peak)
      .def_readonly("digits_used", &pwell::Spectrum::digits_used);

  py::enum_<pwell::EventKind>(pw, "EventKind")
      .value("doublet_birth", pwell::EventKind::doublet_birth)
      .value("doublet_loss", pwell::EventKind::doublet_loss)
      .value("threshold_entry", pwell::EventKind::threshold_entry);

  py::class_<pwell::Event>(pw, "Event")
      .def_readonly("kind", &pwell::Event::kind)
      .def_readonly("alpha", &pwell::Event::alpha)
      .def_readonly("E", &pwell::Event::E);

  py::class_<pwell::SweepRecord>(pw, "SweepRecord")
      .def_readonly("Z", &pwell::SweepRecord::Z)
      .def_readonly("n_levels", &pwell::SweepRecord::n_levels)
      .def_readonly("delta", &pwell::SweepRecord::delta)
      .def_readonly("events", &pwell::SweepRecord::events)
      .def_readonly("root_alphas", &pwell::SweepRecord::root_alphas);

  py::class_<pwell::DoubletBirth>(pw, "DoubletBirth")
      .def_readonly("Z_star", &pwell::DoubletBirth::Z_star)
      .def_readonly("alpha_star", &pwell::DoubletBirth::alpha_star)
      .def_readonly("E_star", &pwell::DoubletBirth::E_star);

  py::enum_<pwell::Region>(pw, "Region")
      .value("left", pwell::Region::left)
      .value("middle", pwell::Region::middle)
      .value("right", pwell::Region::right);

  pw.def("params", &pwell::params, py::arg("E"), py::arg("Z"));
  pw.def("secular_value", &pwell::secular_value, py::arg("E"), py::arg("Z"));
  pw.def("threshold_alpha", &pwell::threshold_alpha, py::arg("Z"));
  pw.def("coefficients", &pwell::coefficients, py::arg("E"), py::arg("Z"));
  pw.def("matching_residuals", &pwell::matching_residuals, py::arg("E"), py::arg("Z"),
         py::arg("coeffs"));
  pw.def("psi", &pwell::psi, py::arg("p"), py::arg("params"), py::arg("coeffs"));
  pw.def("find_spectrum", &pwell::find_spectrum, py::arg("Z"),
         py::arg("policy") = num::PrecisionPolicy{});
  pw.def("count_levels", &pwell::count_levels, py::arg("Z"),
         py::arg("policy") = num::PrecisionPolicy{});
  pw.def("sweep", &pwell::sweep, py::arg("Z_values"), py::arg("policy") = num::PrecisionPolicy{});
  pw.def("locate_doublet_birth", &pwell::locate_doublet_birth, py::arg("Z_lo"), py::arg("Z_hi"),
         py::arg("policy") = num::PrecisionPolicy{});
  pw.def("nodal_zeros", &pwell::nodal_zeros, py::arg("params"), py::arg("coeffs"),
         py::arg("region"), py::arg("limit"), py::arg("policy") = num::PrecisionPolicy{});
  pw.def("adaptive_digits_floor", &pwell::adaptive_digits_floor, py::arg("Z"));

  // ---- independent matching oracles ----
  auto orc = m.def_submodule("oracle", "brute-force matching determinants");
  orc.def("x_matching_det", &oracle::x_matching_det, py::arg("E"), py::arg("T"));
  orc.def("p_matching_det", &oracle::p_matching_det, py::arg("E"), py::arg("Z"));
  orc.def("left_contamination_probe", &oracle::left_contamination_probe, py::arg("E"),
          py::arg("Z"), py::arg("p_probe"));

  m.attr("__version__") = "0.1.0";
}
