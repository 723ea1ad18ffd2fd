// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/fock_rep.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phasekit {

namespace {

constexpr double kPositivitySlack = 1e-12;

const char* mode_tag(Mode i) { return i == Mode::One ? "1" : "2"; }
const char* sign_tag(Sign s) { return s == Sign::Plus ? "+" : "-"; }

double checked_structure(double value, int i, int n1, int n2) {
  if (value < -kPositivitySlack) {
    throw std::domain_error("F_" + std::to_string(i) + "(" + std::to_string(n1) + "," + std::to_string(n2) +
                            ") = " + std::to_string(value) + " violates positivity");
  }
  return std::max(value, 0.0);
}

Complex phase(double angle) { return std::polar(1.0, angle); }

/// |kappa| as used in prefactors; exact 1/k for the negative regime.
double abs_kappa(const KappaSpec& spec) {
  if (spec.is_negative()) return spec.k() == 0 ? 0.0 : 1.0 / spec.k();
  return spec.kappa();
}

}  // namespace

double structure_function(int i, int n1, int n2, double kappa) {
  if (i != 1 && i != 2) throw std::invalid_argument("structure_function: index must be 1 or 2");
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("structure_function: occupations must be nonnegative");
  const int ni = i == 1 ? n1 : n2;
  if (ni == 0) return 0.0;
  return checked_structure(ni * (1.0 + kappa * (n1 + n2 - 1)), i, n1, n2);
}

double structure_function(const KappaSpec& spec, Mode i, int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("structure_function: occupations must be nonnegative");
  const int ni = i == Mode::One ? n1 : n2;
  if (ni == 0) return 0.0;
  return checked_structure(ni * spec.one_plus_kappa_times(n1 + n2 - 1), static_cast<int>(i), n1, n2);
}

double energy(const KappaSpec& spec, int n1, int n2) {
  const int n = n1 + n2;
  if (n == 0) return 0.0;
  return n * spec.one_plus_kappa_times(n - 1);
}

SpacePtr build_space(const KappaSpec& spec) {
  return make_space(spec.shell(), spec.is_negative() ? ShellKind::Quenched : ShellKind::Window);
}

LinearOperator ladder(const KappaSpec& spec, const SpacePtr& space, Mode i, Sign sign) {
  const FockSpace& fs = *space;
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  const double phi = spec.phi();
  const int d1 = i == Mode::One ? 1 : 0;
  const int d2 = i == Mode::Two ? 1 : 0;
  for (Index col = 0; col < fs.dim(); ++col) {
    const BasisState s = fs.state(col);
    if (sign == Sign::Plus) {
      const auto row = fs.find(s.n1 + d1, s.n2 + d2);
      if (!row) continue;
      const double f = structure_function(spec, i, s.n1 + d1, s.n2 + d2);
      const double dh = energy(spec, s.n1 + d1, s.n2 + d2) - energy(spec, s);
      m(*row, col) = std::sqrt(f) * phase(-dh * phi);
    } else {
      const auto row = fs.find(s.n1 - d1, s.n2 - d2);
      if (!row) continue;
      const double f = structure_function(spec, i, s.n1, s.n2);
      const double dh = energy(spec, s) - energy(spec, s.n1 - d1, s.n2 - d2);
      m(*row, col) = std::sqrt(f) * phase(dh * phi);
    }
  }
  return {std::move(m), space, std::string("a") + mode_tag(i) + sign_tag(sign)};
}

LinearOperator number_operator(const SpacePtr& space, Mode i) {
  Matrix m = space->diagonal([i](const BasisState& s) { return Complex(i == Mode::One ? s.n1 : s.n2); });
  return {std::move(m), space, std::string("N") + mode_tag(i)};
}

LinearOperator ladder3(const KappaSpec& spec, const SpacePtr& space, Sign sign) {
  const bool windowed = space->kind() == ShellKind::Window;
  const SpacePtr work = windowed ? make_space(space->shell() + 1, ShellKind::Window) : space;
  Matrix c;
  if (sign == Sign::Plus) {
    c = commutator(ladder(spec, work, Mode::Two, Sign::Plus).matrix, ladder(spec, work, Mode::One, Sign::Minus).matrix);
  } else {
    c = commutator(ladder(spec, work, Mode::One, Sign::Plus).matrix, ladder(spec, work, Mode::Two, Sign::Minus).matrix);
  }
  if (windowed) c = restrict_to(c, *work, *space);
  return {std::move(c), space, std::string("a3") + sign_tag(sign)};
}

LinearOperator ladder3_closed_form(const KappaSpec& spec, const SpacePtr& space, Sign sign) {
  const FockSpace& fs = *space;
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  // -kappa, with the exact 1/k for the quenched case.
  const double minus_kappa = spec.is_negative() ? abs_kappa(spec) : -spec.kappa();
  for (Index col = 0; col < fs.dim(); ++col) {
    const BasisState s = fs.state(col);
    if (sign == Sign::Plus) {
      const auto row = fs.find(s.n1 - 1, s.n2 + 1);
      if (!row || s.n1 == 0) continue;
      m(*row, col) = minus_kappa * std::sqrt(static_cast<double>(s.n1) * (s.n2 + 1));
    } else {
      const auto row = fs.find(s.n1 + 1, s.n2 - 1);
      if (!row || s.n2 == 0) continue;
      m(*row, col) = minus_kappa * std::sqrt(static_cast<double>(s.n1 + 1) * s.n2);
    }
  }
  return {std::move(m), space, std::string("a3") + sign_tag(sign) + " closed form"};
}

LinearOperator hamiltonian(const KappaSpec& spec, const SpacePtr& space) {
  Matrix m = space->diagonal([&spec](const BasisState& s) { return Complex(energy(spec, s)); });
  return {std::move(m), space, "H"};
}

Matrix propagator(const KappaSpec& spec, const FockSpace& space, double t) {
  return space.diagonal([&](const BasisState& s) { return phase(-energy(spec, s) * t); });
}

Matrix sqrt_structure(const KappaSpec& spec, const FockSpace& space, Mode i) {
  return space.diagonal(
      [&](const BasisState& s) { return Complex(std::sqrt(structure_function(spec, i, s.n1, s.n2))); });
}

Matrix sqrt_structure3(const KappaSpec& spec, const FockSpace& space) {
  const double ak = abs_kappa(spec);
  return space.diagonal([ak](const BasisState& s) {
    if (s.n2 == 0) return Complex(0.0);
    return Complex(ak * std::sqrt(static_cast<double>(s.n1 + 1) * s.n2));
  });
}

std::vector<LinearOperator> lie_generators(const KappaSpec& spec, const SpacePtr& space) {
  if (spec.regime() == Regime::Zero) throw std::invalid_argument("lie_generators: kappa must be nonzero");
  // 1/sqrt|kappa| = sqrt(k) in the quenched case.
  const double scale = spec.is_negative() ? std::sqrt(static_cast<double>(spec.k())) : 1.0 / std::sqrt(spec.kappa());
  // 1/(2 kappa) = -k/2 in the quenched case.
  const double half_inv_kappa = spec.is_negative() ? -0.5 * spec.k() : 0.5 / spec.kappa();

  std::vector<LinearOperator> out;
  out.reserve(8);
  out.push_back({scale * ladder(spec, space, Mode::One, Sign::Plus).matrix, space, "E+1"});
  out.push_back({scale * ladder(spec, space, Mode::One, Sign::Minus).matrix, space, "E-1"});
  out.push_back({scale * ladder(spec, space, Mode::Two, Sign::Plus).matrix, space, "E+2"});
  out.push_back({scale * ladder(spec, space, Mode::Two, Sign::Minus).matrix, space, "E-2"});
  out.push_back({scale * ladder3(spec, space, Sign::Plus).matrix, space, "E+3"});
  out.push_back({scale * ladder3(spec, space, Sign::Minus).matrix, space, "E-3"});
  // H_1 = (1/2kappa)[I + kappa(2N1 + N2)] = I/(2kappa) + N1 + N2/2, likewise H_2.
  out.push_back({space->diagonal([&](const BasisState& s) { return Complex(half_inv_kappa + s.n1 + 0.5 * s.n2); }),
                 space, "H1"});
  out.push_back({space->diagonal([&](const BasisState& s) { return Complex(half_inv_kappa + s.n2 + 0.5 * s.n1); }),
                 space, "H2"});
  return out;
}

double lie_closure_residual(const KappaSpec& spec) {
  const SpacePtr space = build_space(spec);
  const bool windowed = !spec.is_negative();
  const SpacePtr work = windowed ? make_space(space->shell() + 1, ShellKind::Window) : space;
  const auto gens = lie_generators(spec, work);

  const Index d = space->dim();
  Matrix basis(d * d, static_cast<Index>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) {
    Matrix g = windowed ? restrict_to(gens[c].matrix, *work, *space) : gens[c].matrix;
    basis.col(static_cast<Index>(c)) = g.reshaped();
  }
  const Eigen::CompleteOrthogonalDecomposition<Matrix> solver(basis);

  double worst = 0.0;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Matrix c = commutator(gens[a].matrix, gens[b].matrix);
      if (windowed) c = restrict_to(c, *work, *space);
      const Vector target = c.reshaped();
      const Vector coeffs = solver.solve(target);
      worst = std::max(worst, max_abs(Vector(basis * coeffs - target)));
    }
  }
  return worst;
}

VerificationReport check_algebra(const KappaSpec& spec, const SpacePtr& space, double tolerance) {
  const FockSpace& fs = *space;
  const bool windowed = fs.kind() == ShellKind::Window;
  const Matrix a1p = ladder(spec, space, Mode::One, Sign::Plus).matrix;
  const Matrix a1m = ladder(spec, space, Mode::One, Sign::Minus).matrix;
  const Matrix a2p = ladder(spec, space, Mode::Two, Sign::Plus).matrix;
  const Matrix a2m = ladder(spec, space, Mode::Two, Sign::Minus).matrix;
  const Matrix n1 = number_operator(space, Mode::One).matrix;
  const Matrix n2 = number_operator(space, Mode::Two).matrix;

  VerificationReport report;
  auto record = [&](const std::string& name, const Matrix& residual, int depth) {
    const ResidualSplit split = split_by_columns(residual, fs, depth);
    if (windowed) {
      report.add_split(name, split, tolerance, "interior: inputs with n1+n2 <= sigma-" + std::to_string(depth));
    } else {
      report.add_split_strict(name, split, tolerance);
    }
  };

  const Matrix rhs1 = fs.diagonal([&](const BasisState& s) { return Complex(spec.one_plus_kappa_times(2 * s.n1 + s.n2)); });
  const Matrix rhs2 = fs.diagonal([&](const BasisState& s) { return Complex(spec.one_plus_kappa_times(s.n1 + 2 * s.n2)); });
  record("[a1-,a1+] = I + kappa(N1+N2+N1)", commutator(a1m, a1p) - rhs1, 1);
  record("[a2-,a2+] = I + kappa(N1+N2+N2)", commutator(a2m, a2p) - rhs2, 1);

  record("[N1,a1+] = +a1+", commutator(n1, a1p) - a1p, 1);
  record("[N1,a1-] = -a1-", commutator(n1, a1m) + a1m, 1);
  record("[N1,a2+] = 0", commutator(n1, a2p), 1);
  record("[N1,a2-] = 0", commutator(n1, a2m), 1);
  record("[N2,a2+] = +a2+", commutator(n2, a2p) - a2p, 1);
  record("[N2,a2-] = -a2-", commutator(n2, a2m) + a2m, 1);
  record("[N2,a1+] = 0", commutator(n2, a1p), 1);
  record("[N2,a1-] = 0", commutator(n2, a1m), 1);

  record("[a1+,a2+] = 0", commutator(a1p, a2p), 1);
  record("[a1-,a2-] = 0", commutator(a1m, a2m), 1);

  record("[a1+,[a1+,a2-]] = 0", commutator(a1p, commutator(a1p, a2m)), 2);
  record("[a1-,[a1-,a2+]] = 0", commutator(a1m, commutator(a1m, a2p)), 2);
  record("[a2+,[a2+,a1-]] = 0", commutator(a2p, commutator(a2p, a1m)), 2);
  record("[a2-,[a2-,a1+]] = 0", commutator(a2m, commutator(a2m, a1p)), 2);
  return report;
}

VerificationReport check_representation(const KappaSpec& spec, const SpacePtr& space, double tolerance) {
  const FockSpace& fs = *space;
  VerificationReport report;

  const Matrix a1p = ladder(spec, space, Mode::One, Sign::Plus).matrix;
  const Matrix a1m = ladder(spec, space, Mode::One, Sign::Minus).matrix;
  const Matrix a2p = ladder(spec, space, Mode::Two, Sign::Plus).matrix;
  const Matrix a2m = ladder(spec, space, Mode::Two, Sign::Minus).matrix;
  report.add("(a1-)^dagger = a1+", max_abs(Matrix(a1m.adjoint()) - a1p), tolerance);
  report.add("(a2-)^dagger = a2+", max_abs(Matrix(a2m.adjoint()) - a2p), tolerance);
  report.add("N1, N2 Hermitian",
             std::max(hermiticity_residual(number_operator(space, Mode::One).matrix),
                      hermiticity_residual(number_operator(space, Mode::Two).matrix)),
             tolerance);

  const Matrix h = hamiltonian(spec, space).matrix;
  report.add("H = a1+ a1- + a2+ a2-", max_abs(Matrix(a1p * a1m + a2p * a2m - h)), tolerance);

  // Spectrum: diagonal entries equal lambda_n = n[1 + kappa(n-1)], level n holds n+1 states.
  double spectrum = max_abs(Matrix(h - Matrix(h.diagonal().asDiagonal())));
  std::vector<int> level_count(static_cast<std::size_t>(fs.shell()) + 1, 0);
  for (Index j = 0; j < fs.dim(); ++j) {
    const int n = fs.state(j).total();
    const double lambda = n == 0 ? 0.0 : n * spec.one_plus_kappa_times(n - 1);
    spectrum = std::max(spectrum, std::abs(h(j, j) - lambda));
    ++level_count[static_cast<std::size_t>(n)];
  }
  bool degeneracy_ok = true;
  for (std::size_t n = 0; n < level_count.size(); ++n) degeneracy_ok &= level_count[n] == static_cast<int>(n) + 1;
  report.add("spectrum lambda_n with degeneracy n+1", degeneracy_ok ? spectrum : 1.0, tolerance);

  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const double r = max_abs(Matrix(ladder3(spec, space, s).matrix - ladder3_closed_form(spec, space, s).matrix));
    report.add(std::string("a3") + sign_tag(s) + " commutator = closed form", r, tolerance);
  }

  // a_i^{+-}(phi) = U(phi) a_i^{+-}(0) U(phi)^dagger with U = exp(-i H phi).
  const KappaSpec at_zero = spec.with_phi(0.0);
  const Matrix u = propagator(spec, fs, spec.phi());
  double cov = 0.0;
  for (Mode i : {Mode::One, Mode::Two}) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Matrix rotated = u * ladder(at_zero, space, i, s).matrix * u.adjoint();
      cov = std::max(cov, max_abs(Matrix(rotated - ladder(spec, space, i, s).matrix)));
    }
  }
  report.add("phi-covariance a(phi) = U a(0) U^dagger", cov, tolerance);
  return report;
}

Matrix restrict_to(const Matrix& m, const FockSpace& from, const FockSpace& to) {
  if (to.shell() > from.shell()) throw std::invalid_argument("restrict_to: target space is larger than source");
  Matrix out(to.dim(), to.dim());
  std::vector<Index> map(static_cast<std::size_t>(to.dim()));
  for (Index j = 0; j < to.dim(); ++j) map[static_cast<std::size_t>(j)] = from.index_of(to.state(j).n1, to.state(j).n2);
  for (Index c = 0; c < to.dim(); ++c) {
    for (Index r = 0; r < to.dim(); ++r) out(r, c) = m(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]);
  }
  return out;
}

Matrix embed_into(const Matrix& m, const FockSpace& from, const FockSpace& to) {
  if (to.shell() < from.shell()) throw std::invalid_argument("embed_into: target space is smaller than source");
  Matrix out = Matrix::Zero(to.dim(), to.dim());
  std::vector<Index> map(static_cast<std::size_t>(from.dim()));
  for (Index j = 0; j < from.dim(); ++j) map[static_cast<std::size_t>(j)] = to.index_of(from.state(j).n1, from.state(j).n2);
  for (Index c = 0; c < from.dim(); ++c) {
    for (Index r = 0; r < from.dim(); ++r) out(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) = m(r, c);
  }
  return out;
}

}  // namespace phasekit
