// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/truncated.hpp"

#include "phasekit/fock_rep.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace phasekit {

namespace {

constexpr int kHostMargin = 2;

void require_window(const KappaSpec& spec) {
  if (spec.is_negative()) throw std::invalid_argument("truncated algebra requires kappa >= 0");
  if (!spec.sigma()) throw std::invalid_argument("truncated algebra requires a window size sigma");
}

Matrix compress(const Matrix& host_matrix, const Window& w) { return restrict_to(host_matrix, *w.host, *w.space); }

ResidualSplit split_components(const Vector& r, const FockSpace& fs, const std::function<bool(const BasisState&)>& edge) {
  ResidualSplit out;
  for (Index j = 0; j < r.size(); ++j) {
    double& slot = edge(fs.state(j)) ? out.shell : out.interior;
    slot = std::max(slot, std::abs(r(j)));
  }
  return out;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

}  // namespace

Window make_window(const KappaSpec& spec) {
  require_window(spec);
  const int sigma = *spec.sigma();
  SpacePtr space = make_space(sigma, ShellKind::Window);
  SpacePtr host = make_space(sigma + kHostMargin, ShellKind::Window);
  Matrix pi = host->diagonal([sigma](const BasisState& s) { return Complex(s.total() <= sigma ? 1.0 : 0.0); });
  return {sigma, space, host, LinearOperator(std::move(pi), host, "Pi_sigma")};
}

std::array<LinearOperator, 4> build_truncated_ladders(const KappaSpec& spec, const Window& w) {
  require_window(spec);
  const Matrix& pi = w.projector.matrix;
  auto project = [&](Mode i, Sign s, const char* name) {
    return LinearOperator(compress(pi * ladder(spec, w.host, i, s).matrix * pi, w), w.space, name);
  };
  return {project(Mode::One, Sign::Plus, "b1+"), project(Mode::One, Sign::Minus, "b1-"),
          project(Mode::Two, Sign::Plus, "b2+"), project(Mode::Two, Sign::Minus, "b2-")};
}

VerificationReport check_truncated_algebra(const KappaSpec& spec, const Window& w, double tolerance) {
  require_window(spec);
  VerificationReport report;
  const FockSpace& fs = *w.space;
  const int sigma = w.sigma;
  const auto b = build_truncated_ladders(spec, w);
  const Matrix& b1p = b[0].matrix;
  const Matrix& b1m = b[1].matrix;
  const Matrix& b2p = b[2].matrix;
  const Matrix& b2m = b[3].matrix;
  const Matrix n1 = number_operator(w.space, Mode::One).matrix;
  const Matrix n2 = number_operator(w.space, Mode::Two).matrix;

  // Modified commutators: the bulk term minus the boundary dyads.
  Matrix rhs1 = fs.diagonal([&](const BasisState& s) { return Complex(spec.one_plus_kappa_times(2 * s.n1 + s.n2)); });
  Matrix rhs2 = fs.diagonal([&](const BasisState& s) { return Complex(spec.one_plus_kappa_times(s.n1 + 2 * s.n2)); });
  for (int l = 0; l <= sigma; ++l) {
    const Index a = fs.index_of(sigma - l, l);
    rhs1(a, a) -= structure_function(spec, Mode::One, sigma - l + 1, l);
    const Index c = fs.index_of(l, sigma - l);
    rhs2(c, c) -= structure_function(spec, Mode::Two, l, sigma - l + 1);
  }
  report.add("[b1-,b1+] = I + kappa(2N1+N2) - boundary dyads", max_abs(commutator(b1m, b1p) - rhs1), tolerance);
  report.add("[b2-,b2+] = I + kappa(N1+2N2) - boundary dyads", max_abs(commutator(b2m, b2p) - rhs2), tolerance);

  report.add("[N1,b1+] = +b1+", max_abs(commutator(n1, b1p) - b1p), tolerance);
  report.add("[N1,b1-] = -b1-", max_abs(commutator(n1, b1m) + b1m), tolerance);
  report.add("[N1,b2+-] = 0", std::max(max_abs(commutator(n1, b2p)), max_abs(commutator(n1, b2m))), tolerance);
  report.add("[N2,b2+] = +b2+", max_abs(commutator(n2, b2p) - b2p), tolerance);
  report.add("[N2,b2-] = -b2-", max_abs(commutator(n2, b2m) + b2m), tolerance);
  report.add("[N2,b1+-] = 0", std::max(max_abs(commutator(n2, b1p)), max_abs(commutator(n2, b1m))), tolerance);
  report.add("[b1+,b2+] = 0", max_abs(commutator(b1p, b2p)), tolerance);
  report.add("[b1-,b2-] = 0", max_abs(commutator(b1m, b2m)), tolerance);

  // Triple relations: zero on inputs with n1 + n2 <= sigma - 2. On the last two
  // shells they equal an exact defect built from the sigma+1 shell projector Q.
  const Matrix q = w.host->shell_projector(sigma + 1);
  const Matrix a1p = ladder(spec, w.host, Mode::One, Sign::Plus).matrix;
  const Matrix a1m = ladder(spec, w.host, Mode::One, Sign::Minus).matrix;
  const Matrix a2p = ladder(spec, w.host, Mode::Two, Sign::Plus).matrix;
  const Matrix a2m = ladder(spec, w.host, Mode::Two, Sign::Minus).matrix;
  struct Triple {
    const char* name;
    Matrix value;
    Matrix defect;
  };
  const Triple triples[] = {
      {"[b1+,[b1+,b2-]]", commutator(b1p, commutator(b1p, b2m)), -compress(a2m * q * a1p * a1p, w)},
      {"[b1-,[b1-,b2+]]", commutator(b1m, commutator(b1m, b2p)), -compress(a1m * a1m * q * a2p, w)},
      {"[b2+,[b2+,b1-]]", commutator(b2p, commutator(b2p, b1m)), -compress(a1m * q * a2p * a2p, w)},
      {"[b2-,[b2-,b1+]]", commutator(b2m, commutator(b2m, b1p)), -compress(a2m * a2m * q * a1p, w)},
  };
  for (const Triple& t : triples) {
    report.add_split(std::string(t.name) + " = 0 off the last two shells", split_by_columns(t.value, fs, 2),
                            tolerance, "interior: inputs with n1+n2 <= sigma-2; shell part is the boundary defect");
    report.add(std::string(t.name) + " = boundary defect", max_abs(t.value - t.defect), tolerance);
  }

  report.add("(b1-)^dagger = b1+", max_abs(b1m.adjoint() - b1p), tolerance);
  report.add("(b2-)^dagger = b2+", max_abs(b2m.adjoint() - b2p), tolerance);

  // Pi b Pi = b on the host, and b reproduces the action table with the shell cutoff.
  double inside = 0.0;
  double table = 0.0;
  const Mode modes[] = {Mode::One, Mode::One, Mode::Two, Mode::Two};
  const Sign signs[] = {Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus};
  for (std::size_t i = 0; i < 4; ++i) {
    const Matrix big = embed_into(b[i].matrix, fs, *w.host);
    inside = std::max(inside, max_abs(w.projector.matrix * big * w.projector.matrix - big));
    table = std::max(table, max_abs(b[i].matrix - ladder(spec, w.space, modes[i], signs[i]).matrix));
  }
  report.add("Pi b Pi = b", inside, tolerance);
  report.add("b matches the truncated action table", table, tolerance);

  // Interior agreement with a on the larger host window.
  double agree = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Matrix a = compress(ladder(spec, w.host, modes[i], signs[i]).matrix, w);
    for (Index c = 0; c < fs.dim(); ++c) {
      for (Index r = 0; r < fs.dim(); ++r) {
        if (fs.state(r).total() <= sigma - 1 && fs.state(c).total() <= sigma - 1) {
          agree = std::max(agree, std::abs(a(r, c) - b[i].matrix(r, c)));
        }
      }
    }
  }
  report.add("b agrees with a below the shell", agree, tolerance);
  return report;
}

LinearOperator build_Einf(const KappaSpec& spec, const Window& w, int which) {
  require_window(spec);
  const FockSpace& fs = *w.space;
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  for (const BasisState& s : fs.states()) {
    if (which == 1 || which == 2) {
      const BasisState up = which == 1 ? BasisState{s.n1 + 1, s.n2} : BasisState{s.n1, s.n2 + 1};
      const auto col = fs.find(up.n1, up.n2);
      if (!col) continue;
      m(fs.index_of(s.n1, s.n2), *col) = std::polar(1.0, (energy(spec, up) - energy(spec, s)) * spec.phi());
    } else if (which == 3) {
      const auto row = fs.find(s.n1 + 1, s.n2);
      const auto col = fs.find(s.n1, s.n2 + 1);
      if (row && col) m(*row, *col) = 1.0;
    } else {
      throw std::invalid_argument("build_Einf: which must be 1, 2 or 3");
    }
  }
  return {std::move(m), w.space, "E" + std::to_string(which) + "inf"};
}

VerificationReport check_Einf(const KappaSpec& spec, const Window& w, double tolerance) {
  require_window(spec);
  VerificationReport report;
  const FockSpace& fs = *w.space;
  const Matrix id = fs.identity();
  const Matrix e1 = build_Einf(spec, w, 1).matrix;
  const Matrix e2 = build_Einf(spec, w, 2).matrix;
  const Matrix e3 = build_Einf(spec, w, 3).matrix;
  const Matrix edge_n1 = fs.diagonal([](const BasisState& s) { return Complex(s.n1 == 0 ? 1.0 : 0.0); });
  const Matrix edge_n2 = fs.diagonal([](const BasisState& s) { return Complex(s.n2 == 0 ? 1.0 : 0.0); });
  const Matrix shell = fs.shell_projector(w.sigma);

  report.add("E1inf^dagger E1inf = I - sum |0,n2><0,n2|", max_abs(e1.adjoint() * e1 - (id - edge_n1)), tolerance);
  report.add("E1inf E1inf^dagger = I - P_shell", max_abs(e1 * e1.adjoint() - (id - shell)), tolerance,
             "window defect: the untruncated product is I");
  report.add("E2inf^dagger E2inf = I - sum |n1,0><n1,0|", max_abs(e2.adjoint() * e2 - (id - edge_n2)), tolerance);
  report.add("E2inf E2inf^dagger = I - P_shell", max_abs(e2 * e2.adjoint() - (id - shell)), tolerance,
             "window defect: the untruncated product is I");
  report.add("E3inf E3inf^dagger = I - sum |0,n2><0,n2|", max_abs(e3 * e3.adjoint() - (id - edge_n1)), tolerance);
  report.add("E3inf^dagger E3inf = I - sum |n1,0><n1,0|", max_abs(e3.adjoint() * e3 - (id - edge_n2)), tolerance);
  report.add("E3inf = E1inf^dagger E2inf", max_abs(e3 - e1.adjoint() * e2), tolerance);

  report.add_split_strict("a1- = E1inf sqrt(F1)",
                          split_by_columns(ladder(spec, w.space, Mode::One, Sign::Minus).matrix -
                                               e1 * sqrt_structure(spec, fs, Mode::One),
                                           fs, 1),
                          tolerance);
  report.add_split_strict("a2- = E2inf sqrt(F2)",
                          split_by_columns(ladder(spec, w.space, Mode::Two, Sign::Minus).matrix -
                                               e2 * sqrt_structure(spec, fs, Mode::Two),
                                           fs, 1),
                          tolerance);

  double isometry = 0.0;
  double norm = 0.0;
  for (const Matrix* e : {&e1, &e2, &e3}) {
    isometry = std::max(isometry, max_abs(*e * e->adjoint() * *e - *e));
    norm = std::max(norm, spectral_norm(*e));
  }
  report.add("Einf are partial isometries", isometry, tolerance);
  report.add("Einf operator norm <= 1", std::max(0.0, norm - 1.0), tolerance);
  return report;
}

ThetaState theta_state(const KappaSpec& spec, const Window& w, double theta1, double theta2, double phi) {
  require_window(spec);
  const FockSpace& fs = *w.space;
  Vector v(fs.dim());
  for (Index j = 0; j < fs.dim(); ++j) {
    const BasisState& s = fs.state(j);
    v(j) = std::polar(1.0, s.n1 * theta1) * std::polar(1.0, s.n2 * theta2) * std::polar(1.0, -energy(spec, s) * phi);
  }
  return {theta1, theta2, phi, StateVector(std::move(v), w.space, "|theta1,theta2,phi)")};
}

ThetaResiduals theta_residuals(const KappaSpec& spec, const Window& w, const ThetaState& s) {
  const KappaSpec at_phi = spec.with_phi(s.phi);
  const FockSpace& fs = *w.space;
  const Vector& v = s.state.amps;
  const auto on_shell = [&](const BasisState& b) { return b.total() == w.sigma; };
  const auto on_edge = [](const BasisState& b) { return b.n1 == 0; };
  ThetaResiduals out;
  out.e1 = split_components(build_Einf(at_phi, w, 1).matrix * v - std::polar(1.0, s.theta1) * v, fs, on_shell);
  out.e2 = split_components(build_Einf(at_phi, w, 2).matrix * v - std::polar(1.0, s.theta2) * v, fs, on_shell);
  out.e3 = split_components(build_Einf(at_phi, w, 3).matrix * v - std::polar(1.0, s.theta2 - s.theta1) * v, fs, on_edge);
  return out;
}

Matrix quadrature_average(const KappaSpec& spec, const Window& w, double phi, int grid) {
  if (grid < 1) throw std::invalid_argument("quadrature grid must be positive");
  const Index d = w.space->dim();
  Matrix sum = Matrix::Zero(d, d);
  for (int i = 0; i < grid; ++i) {
    const double t1 = -kPi + kTwoPi * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double t2 = -kPi + kTwoPi * j / grid;
      const Vector v = theta_state(spec, w, t1, t2, phi).state.amps;
      sum.noalias() += v * v.adjoint();
    }
  }
  return sum / (static_cast<double>(grid) * grid);
}

VerificationReport quadrature_closure(const KappaSpec& spec, const Window& w, double phi, int grid, double tolerance) {
  VerificationReport report;
  const Matrix avg = quadrature_average(spec, w, phi, grid);
  const std::string note = grid > w.sigma ? "grid exceeds sigma: exact" : "grid <= sigma: aliasing expected";
  report.add("quadrature closure G=" + std::to_string(grid), max_abs(avg - w.space->identity()), tolerance, note);
  return report;
}

}  // namespace phasekit
