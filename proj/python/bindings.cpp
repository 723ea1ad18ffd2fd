// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/fock_rep.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/serialize.hpp"
#include "phasekit/truncated.hpp"
#include "phasekit/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace phasekit;

namespace {

Mode mode_of(int i) {
  if (i == 1) return Mode::One;
  if (i == 2) return Mode::Two;
  throw std::invalid_argument("mode must be 1 or 2");
}

Sign sign_of(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

std::vector<std::pair<int, int>> basis_of(const FockSpace& fs) {
  std::vector<std::pair<int, int>> out;
  for (const BasisState& s : fs.states()) out.emplace_back(s.n1, s.n2);
  return out;
}

}  // namespace

PYBIND11_MODULE(_phasekit, m) {
  m.doc() = "Matrix realizations of a generalized oscillator algebra, phase operators, phase states and MUBs";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<KappaSpec>(m, "KappaSpec")
      .def_static("negative", &KappaSpec::negative, py::arg("k"), py::arg("phi") = 0.0)
      .def_static("non_negative", &KappaSpec::non_negative, py::arg("kappa"), py::arg("sigma"), py::arg("phi") = 0.0)
      .def_static("from_kappa", &KappaSpec::from_kappa, py::arg("kappa"), py::arg("sigma") = py::none(),
                  py::arg("phi") = 0.0)
      .def_property_readonly("kappa", &KappaSpec::kappa)
      .def_property_readonly("phi", &KappaSpec::phi)
      .def_property_readonly("sigma", &KappaSpec::sigma)
      .def_property_readonly("shell", &KappaSpec::shell)
      .def_property_readonly("regime", [](const KappaSpec& s) { return to_string(s.regime()); })
      .def_property_readonly("k", &KappaSpec::k)
      .def("with_phi", &KappaSpec::with_phi)
      .def("__repr__", [](const KappaSpec& s) {
        return "KappaSpec(kappa=" + std::to_string(s.kappa()) + ", regime=" + to_string(s.regime()) +
               ", shell=" + std::to_string(s.shell()) + ")";
      });

  m.def("structure_function", py::overload_cast<int, int, int, double>(&structure_function), py::arg("i"),
        py::arg("n1"), py::arg("n2"), py::arg("kappa"));
  m.def("energy", py::overload_cast<const KappaSpec&, int, int>(&energy), py::arg("spec"), py::arg("n1"), py::arg("n2"));
  m.def("basis", [](const KappaSpec& s) { return basis_of(*build_space(s)); }, py::arg("spec"),
        "Basis states (n1, n2) in matrix order");
  m.def("ladder", [](const KappaSpec& s, int i, const std::string& sign) {
        return ladder(s, build_space(s), mode_of(i), sign_of(sign)).matrix;
      }, py::arg("spec"), py::arg("i"), py::arg("sign"));
  m.def("ladder3", [](const KappaSpec& s, const std::string& sign) {
        return ladder3(s, build_space(s), sign_of(sign)).matrix;
      }, py::arg("spec"), py::arg("sign"));
  m.def("number_operator", [](const KappaSpec& s, int i) { return number_operator(build_space(s), mode_of(i)).matrix; },
        py::arg("spec"), py::arg("i"));
  m.def("hamiltonian", [](const KappaSpec& s) { return hamiltonian(s, build_space(s)).matrix; }, py::arg("spec"));
  m.def("lie_closure_residual", &lie_closure_residual, py::arg("spec"));

  m.def("phase_operator", [](const KappaSpec& s, const std::string& family) {
        return build_phase_operator(s, build_space(s), phase_family_from_string(family)).op.matrix;
      }, py::arg("spec"), py::arg("family"));
  m.def("phase_state", [](const KappaSpec& s, const std::string& family, int l, long long mm, double phi) {
        return phase_state(s, build_space(s), phase_family_from_string(family), l, mm, phi).amps;
      }, py::arg("spec"), py::arg("family"), py::arg("l"), py::arg("m"), py::arg("phi"));
  m.def("overlap_formula", [](const KappaSpec& s, const std::string& family, int l, long long m1, double phi, int l2,
                              long long m2, double phi2) {
        return overlap_formula(s, phase_family_from_string(family), l, m1, phi, l2, m2, phi2);
      }, py::arg("spec"), py::arg("family"), py::arg("l"), py::arg("m"), py::arg("phi"), py::arg("l2"), py::arg("m2"),
      py::arg("phi2"));
  m.def("evolve", [](const KappaSpec& s, const Vector& amps, double t) {
        return evolve(s, StateVector(amps, build_space(s), "state"), t).amps;
      }, py::arg("spec"), py::arg("amps"), py::arg("t"));

  m.def("truncated_ladders", [](const KappaSpec& s) {
        const auto b = build_truncated_ladders(s, make_window(s));
        return std::vector<Matrix>{b[0].matrix, b[1].matrix, b[2].matrix, b[3].matrix};
      }, py::arg("spec"), "[b1+, b1-, b2+, b2-] on the window n1 + n2 <= sigma");
  m.def("shift_operator", [](const KappaSpec& s, int which) { return build_Einf(s, make_window(s), which).matrix; },
        py::arg("spec"), py::arg("which"));
  m.def("quadrature_average", [](const KappaSpec& s, double phi, int grid) {
        return quadrature_average(s, make_window(s), phi, grid);
      }, py::arg("spec"), py::arg("phi"), py::arg("grid"));

  m.def("quantized_phase", &quantized_phase, py::arg("N"), py::arg("a"));
  m.def("mub_vector", &mub_vector, py::arg("N"), py::arg("a"), py::arg("alpha"));
  m.def("mub_vector_e3route", &mub_vector_e3route, py::arg("N"), py::arg("a"), py::arg("alpha"));
  m.def("gauss_sum", [](long long u, long long v, long long w) { return gauss_sum({u, v, w}); }, py::arg("u"),
        py::arg("v"), py::arg("w"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("mub_set_json", [](int N, const std::string& route) {
        return to_json(build_mub_set(N, mub_route_from_string(route))).dump();
      }, py::arg("N"), py::arg("route") = "e1");

  m.def("verify_all_json", [](int k, double phi, int sigma, int N, std::uint64_t seed, double tolerance) {
        VerifyConfig cfg;
        cfg.k = k;
        cfg.phi = phi;
        cfg.sigma = sigma;
        cfg.mub_N = N;
        cfg.seed = seed;
        cfg.tolerance = tolerance;
        return to_json(verify_all(cfg)).dump();
      }, py::arg("k") = 3, py::arg("phi") = 0.0, py::arg("sigma") = 4, py::arg("N") = 5, py::arg("seed") = 1,
      py::arg("tolerance") = kDefaultTolerance);
  m.def("operator_roundtrip_json", [](const std::string& text) {
        return to_json(linear_operator_from_json(parse_json(text))).dump();
      }, py::arg("text"));
}
