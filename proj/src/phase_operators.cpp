// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/phase_operators.hpp"

#include "phasekit/fock_rep.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace phasekit {

namespace {

void require_quenched(const KappaSpec& spec, const SpacePtr& space, const char* who) {
  if (!spec.is_negative()) throw std::invalid_argument(std::string(who) + ": requires kappa < 0");
  if (space->kind() != ShellKind::Quenched || space->shell() != spec.k()) {
    throw std::invalid_argument(std::string(who) + ": space does not match the kappa < 0 representation");
  }
}

/// Adds |dst><src| with the phase e^{i[H(src) - H(dst)] phi}.
void add_hop(const KappaSpec& spec, const FockSpace& fs, Matrix& m, BasisState src, BasisState dst, bool phased) {
  const double angle = phased ? (energy(spec, src) - energy(spec, dst)) * spec.phi() : 0.0;
  m(fs.index_of(dst.n1, dst.n2), fs.index_of(src.n1, src.n2)) = std::polar(1.0, angle);
}

PhaseOperator assemble(const SpacePtr& space, const Partition& part, Matrix full, PhaseFamily family) {
  std::vector<LinearOperator> blocks;
  blocks.reserve(part.blocks.size());
  for (std::size_t l = 0; l < part.blocks.size(); ++l) {
    Matrix b = Matrix::Zero(full.rows(), full.cols());
    for (Index c : part.blocks[l]) {
      for (Index r : part.blocks[l]) b(r, c) = full(r, c);
    }
    blocks.push_back({std::move(b), space, to_string(family) + "(" + std::to_string(l) + ")"});
  }
  return {LinearOperator(std::move(full), space, to_string(family)), family, std::move(blocks)};
}

/// Maps an angle into [cut, cut + 2 pi).
double wrap_from(double angle, double cut) {
  double a = std::fmod(angle - cut, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a + cut;
}

double angular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::A: return "A";
    case PartitionKind::B: return "B";
    case PartitionKind::C: return "C";
  }
  return "?";
}

std::string to_string(PhaseFamily family) {
  switch (family) {
    case PhaseFamily::E1d: return "E1d";
    case PhaseFamily::E2d: return "E2d";
    case PhaseFamily::E3d: return "E3d";
    case PhaseFamily::Ed: return "Ed";
  }
  return "?";
}

PhaseFamily phase_family_from_string(const std::string& name) {
  if (name == "E1d" || name == "e1") return PhaseFamily::E1d;
  if (name == "E2d" || name == "e2") return PhaseFamily::E2d;
  if (name == "E3d" || name == "e3") return PhaseFamily::E3d;
  if (name == "Ed" || name == "ed") return PhaseFamily::Ed;
  throw std::invalid_argument("unknown phase family '" + name + "' (expected E1d, E2d, E3d or Ed)");
}

Partition build_partition(const KappaSpec& spec, const SpacePtr& space, PartitionKind kind) {
  require_quenched(spec, space, "build_partition");
  const int k = spec.k();
  Partition p{kind, {}};
  p.blocks.resize(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    auto& block = p.blocks[static_cast<std::size_t>(l)];
    switch (kind) {
      case PartitionKind::A:
        for (int n = 0; n <= k - l; ++n) block.push_back(space->index_of(n, l));
        break;
      case PartitionKind::B:
        for (int n = 0; n <= k - l; ++n) block.push_back(space->index_of(l, n));
        break;
      case PartitionKind::C:
        for (int n = 0; n <= l; ++n) block.push_back(space->index_of(l - n, n));
        break;
    }
  }
  return p;
}

PhaseOperator build_E1d(const KappaSpec& spec, const SpacePtr& space) {
  require_quenched(spec, space, "build_E1d");
  const FockSpace& fs = *space;
  const int k = spec.k();
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  for (const BasisState& s : fs.states()) {
    const BasisState dst = s.n1 == 0 ? BasisState{k - s.n2, s.n2} : BasisState{s.n1 - 1, s.n2};
    add_hop(spec, fs, m, s, dst, true);
  }
  return assemble(space, build_partition(spec, space, PartitionKind::A), std::move(m), PhaseFamily::E1d);
}

PhaseOperator build_E2d(const KappaSpec& spec, const SpacePtr& space) {
  require_quenched(spec, space, "build_E2d");
  const FockSpace& fs = *space;
  const int k = spec.k();
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  for (const BasisState& s : fs.states()) {
    const BasisState dst = s.n2 == 0 ? BasisState{s.n1, k - s.n1} : BasisState{s.n1, s.n2 - 1};
    add_hop(spec, fs, m, s, dst, true);
  }
  return assemble(space, build_partition(spec, space, PartitionKind::B), std::move(m), PhaseFamily::E2d);
}

PhaseOperator build_E3d(const KappaSpec& spec, const SpacePtr& space) {
  require_quenched(spec, space, "build_E3d");
  const FockSpace& fs = *space;
  Matrix m = Matrix::Zero(fs.dim(), fs.dim());
  for (const BasisState& s : fs.states()) {
    const BasisState dst = s.n2 == 0 ? BasisState{0, s.n1} : BasisState{s.n1 + 1, s.n2 - 1};
    add_hop(spec, fs, m, s, dst, false);
  }
  return assemble(space, build_partition(spec, space, PartitionKind::C), std::move(m), PhaseFamily::E3d);
}

PhaseOperator build_Ed(const KappaSpec& spec, const SpacePtr& space) {
  require_quenched(spec, space, "build_Ed");
  const FockSpace& fs = *space;
  const Index d = fs.dim();
  Matrix m = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) add_hop(spec, fs, m, fs.state(j), fs.state(j == 0 ? d - 1 : j - 1), true);
  return {LinearOperator(std::move(m), space, "Ed"), PhaseFamily::Ed, {}};
}

PhaseOperator build_phase_operator(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family) {
  switch (family) {
    case PhaseFamily::E1d: return build_E1d(spec, space);
    case PhaseFamily::E2d: return build_E2d(spec, space);
    case PhaseFamily::E3d: return build_E3d(spec, space);
    case PhaseFamily::Ed: return build_Ed(spec, space);
  }
  throw std::invalid_argument("build_phase_operator: unknown family");
}

double spectrum_distance(const Matrix& m, std::vector<double> expected) {
  if (static_cast<Index>(expected.size()) != m.rows()) return std::numeric_limits<double>::infinity();
  if (expected.empty()) return 0.0;
  const Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) return std::numeric_limits<double>::infinity();

  // Place the branch cut in the middle of the widest gap of the expected set.
  for (double& a : expected) a = wrap_from(a, 0.0);
  std::sort(expected.begin(), expected.end());
  double cut = 0.0;
  double widest = -1.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double next = i + 1 < expected.size() ? expected[i + 1] : expected.front() + kTwoPi;
    if (next - expected[i] > widest) {
      widest = next - expected[i];
      cut = expected[i] + 0.5 * widest;
    }
  }

  std::vector<double> got;
  got.reserve(expected.size());
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) got.push_back(wrap_from(std::arg(solver.eigenvalues()(i)), cut));
  for (double& a : expected) a = wrap_from(a, cut);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());

  double worst = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    worst = std::max(worst, angular_distance(got[u], expected[u]));
    worst = std::max(worst, std::abs(std::abs(solver.eigenvalues()(i)) - 1.0));
  }
  return worst;
}

int orbit_length(const Matrix& op, Index start, double tolerance) {
  const Index d = op.rows();
  Vector v = Vector::Unit(d, start);
  for (int step = 1; step <= d; ++step) {
    v = op * v;
    Index at = 0;
    const double peak = v.cwiseAbs().maxCoeff(&at);
    if (std::abs(peak - 1.0) > tolerance || std::abs(v.squaredNorm() - 1.0) > tolerance) return -1;
    if (at == start) return step;
  }
  return -1;
}

VerificationReport check_polar(const KappaSpec& spec, const SpacePtr& space, double tolerance) {
  VerificationReport report;
  const FockSpace& fs = *space;
  const Matrix e1 = build_E1d(spec, space).op.matrix;
  const Matrix e2 = build_E2d(spec, space).op.matrix;
  const Matrix e3 = build_E3d(spec, space).op.matrix;
  const Matrix f1 = sqrt_structure(spec, fs, Mode::One);
  const Matrix f2 = sqrt_structure(spec, fs, Mode::Two);
  const Matrix f3 = sqrt_structure3(spec, fs);

  report.add("a1- = E1d sqrt(F1)", max_abs(ladder(spec, space, Mode::One, Sign::Minus).matrix - e1 * f1), tolerance);
  report.add("a1+ = sqrt(F1) E1d^dagger", max_abs(ladder(spec, space, Mode::One, Sign::Plus).matrix - f1 * e1.adjoint()),
             tolerance);
  report.add("a2- = E2d sqrt(F2)", max_abs(ladder(spec, space, Mode::Two, Sign::Minus).matrix - e2 * f2), tolerance);
  report.add("a2+ = sqrt(F2) E2d^dagger", max_abs(ladder(spec, space, Mode::Two, Sign::Plus).matrix - f2 * e2.adjoint()),
             tolerance);
  report.add("a3- = E3d sqrt(F3)", max_abs(ladder3(spec, space, Sign::Minus).matrix - e3 * f3), tolerance);
  report.add("a3+ = sqrt(F3) E3d^dagger", max_abs(ladder3(spec, space, Sign::Plus).matrix - f3 * e3.adjoint()),
             tolerance);
  return report;
}

VerificationReport check_phase_operators(const KappaSpec& spec, const SpacePtr& space, double tolerance) {
  VerificationReport report;
  const Index d = space->dim();

  for (PhaseFamily fam : {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d, PhaseFamily::Ed}) {
    const PhaseOperator p = build_phase_operator(spec, space, fam);
    const std::string tag = to_string(fam);
    report.add(tag + " unitary", unitarity_residual(p.op.matrix), tolerance);
    if (p.block_ops.empty()) continue;

    const PartitionKind kind = fam == PhaseFamily::E1d   ? PartitionKind::A
                               : fam == PhaseFamily::E2d ? PartitionKind::B
                                                         : PartitionKind::C;
    const Partition part = build_partition(spec, space, kind);
    Matrix sum = Matrix::Zero(d, d);
    double orth = 0.0;
    double spectrum = 0.0;
    for (std::size_t l = 0; l < p.block_ops.size(); ++l) {
      const Matrix& bl = p.block_ops[l].matrix;
      sum += bl;
      for (std::size_t l2 = 0; l2 < p.block_ops.size(); ++l2) {
        if (l2 != l) orth = std::max(orth, max_abs(bl * p.block_ops[l2].matrix.adjoint()));
      }
      // Eigenvalues of each block are the roots of unity of the block size.
      const auto& idx = part.blocks[l];
      const Index n = static_cast<Index>(idx.size());
      Matrix sub(n, n);
      for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) sub(r, c) = bl(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
      }
      std::vector<double> roots;
      for (Index m = 0; m < n; ++m) roots.push_back(kTwoPi * static_cast<double>(m) / static_cast<double>(n));
      spectrum = std::max(spectrum, spectrum_distance(sub, roots));
    }
    report.add(tag + " = sum of block operators", max_abs(sum - p.op.matrix), tolerance);
    report.add(tag + " block orthogonality", orth, tolerance);
    report.add(tag + " block spectra are roots of unity", spectrum, 1e-9);
  }

  const Matrix ed = build_Ed(spec, space).op.matrix;
  Matrix power = Matrix::Identity(d, d);
  for (Index i = 0; i < d; ++i) power = ed * power;
  report.add("Ed^d = I", max_abs(power - Matrix::Identity(d, d)), tolerance);

  std::vector<double> roots;
  for (Index m = 0; m < d; ++m) roots.push_back(kTwoPi * static_cast<double>(m) / static_cast<double>(d));
  report.add("Ed spectrum = d-th roots of unity", spectrum_distance(ed, roots), 1e-9);

  int worst_orbit = static_cast<int>(d);
  for (Index j = 0; j < d; ++j) {
    const int len = orbit_length(ed, j, tolerance);
    if (len != d) worst_orbit = len;
  }
  report.add("Ed orbit visits all d basis rays", worst_orbit == d ? 0.0 : 1.0, tolerance,
             "orbit length " + std::to_string(worst_orbit) + " of " + std::to_string(d));
  return report;
}

}  // namespace phasekit
