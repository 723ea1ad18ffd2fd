// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/phase_states.hpp"

#include "phasekit/fock_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phasekit {

namespace {

void require_block(const KappaSpec& spec, PhaseFamily family, int l) {
  if (!spec.is_negative()) throw std::invalid_argument("phase states require kappa < 0");
  if (family == PhaseFamily::Ed) return;
  if (l < 0 || l > spec.k()) {
    throw std::out_of_range("block index l = " + std::to_string(l) + " outside 0.." + std::to_string(spec.k()));
  }
}

/// The basis state carrying the n-th term of the block-l sum.
BasisState block_member(PhaseFamily family, int l, int n) {
  switch (family) {
    case PhaseFamily::E1d: return {n, l};
    case PhaseFamily::E2d: return {l, n};
    case PhaseFamily::E3d: return {l - n, n};
    case PhaseFamily::Ed: break;
  }
  throw std::logic_error("block_member: Ed has no blocks");
}

/// Phi indices of block l in the order of the sum index n.
std::vector<Index> block_indices(const KappaSpec& spec, const FockSpace& fs, PhaseFamily family, int l) {
  std::vector<Index> out;
  const int size = block_size(spec, family, l);
  for (int n = 0; n < size; ++n) {
    const BasisState s = block_member(family, l, n);
    out.push_back(fs.index_of(s.n1, s.n2));
  }
  return out;
}

std::string state_label(PhaseFamily family, int l, int m, double phi) {
  std::string out = to_string(family) + "|";
  if (family != PhaseFamily::Ed) out += std::to_string(l) + ",";
  return out + std::to_string(m) + "," + std::to_string(phi) + ">";
}

Matrix block_operator(const PhaseOperator& op, PhaseFamily family, int l) {
  return family == PhaseFamily::Ed ? op.op.matrix : op.block_ops.at(static_cast<std::size_t>(l)).matrix;
}

}  // namespace

int block_size(const KappaSpec& spec, PhaseFamily family, int l) {
  require_block(spec, family, l);
  const int k = spec.k();
  switch (family) {
    case PhaseFamily::E1d:
    case PhaseFamily::E2d: return k - l + 1;
    case PhaseFamily::E3d: return l + 1;
    case PhaseFamily::Ed: return (k + 1) * (k + 2) / 2;
  }
  return 0;
}

int canonical_m(long long m, int size) {
  if (size <= 0) throw std::invalid_argument("canonical_m: size must be positive");
  long long r = m % size;
  if (r < 0) r += size;
  return static_cast<int>(r);
}

double eigen_angle(const KappaSpec& spec, PhaseFamily family, int l, long long m) {
  const int size = block_size(spec, family, l);
  return kTwoPi * canonical_m(m, size) / static_cast<double>(size);
}

StateVector phase_state(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family, int l, long long m,
                        double phi) {
  require_block(spec, family, l);
  const FockSpace& fs = *space;
  if (fs.kind() != ShellKind::Quenched || fs.shell() != spec.k()) {
    throw std::invalid_argument("phase_state: space does not match the kappa < 0 representation");
  }
  const int size = block_size(spec, family, l);
  const int mc = canonical_m(m, size);
  const double norm = 1.0 / std::sqrt(static_cast<double>(size));
  Vector v = Vector::Zero(fs.dim());

  if (family == PhaseFamily::Ed) {
    for (Index j = 0; j < fs.dim(); ++j) {
      v(j) = norm * root_of_unity(static_cast<long long>(mc) * j, size) * std::polar(1.0, -energy(spec, fs.state(j)) * phi);
    }
  } else if (family == PhaseFamily::E3d) {
    const Complex prefactor = norm * std::polar(1.0, -energy(spec, 0, l) * phi);
    for (int n = 0; n < size; ++n) v(fs.index_of(l - n, n)) = prefactor * root_of_unity(static_cast<long long>(mc) * n, size);
  } else {
    for (int n = 0; n < size; ++n) {
      const BasisState s = block_member(family, l, n);
      v(fs.index_of(s.n1, s.n2)) =
          norm * std::polar(1.0, -energy(spec, s) * phi) * root_of_unity(static_cast<long long>(mc) * n, size);
    }
  }
  return {std::move(v), space, state_label(family, l, mc, phi)};
}

PhaseStateFamily phase_states(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family, int l, double phi) {
  PhaseStateFamily out{family, family == PhaseFamily::Ed ? std::nullopt : std::optional<int>(l), phi, {}};
  const int size = block_size(spec, family, l);
  out.states.reserve(static_cast<std::size_t>(size));
  for (int m = 0; m < size; ++m) out.states.push_back(phase_state(spec, space, family, l, m, phi));
  return out;
}

PhaseStateFamily phase_states_E1(const KappaSpec& spec, const SpacePtr& space, int l, double phi) {
  return phase_states(spec, space, PhaseFamily::E1d, l, phi);
}

PhaseStateFamily phase_states_E2(const KappaSpec& spec, const SpacePtr& space, int l, double phi) {
  return phase_states(spec, space, PhaseFamily::E2d, l, phi);
}

PhaseStateFamily phase_states_E3(const KappaSpec& spec, const SpacePtr& space, int l, double phi) {
  return phase_states(spec, space, PhaseFamily::E3d, l, phi);
}

PhaseStateFamily phase_states_Ed(const KappaSpec& spec, const SpacePtr& space, double phi) {
  return phase_states(spec, space, PhaseFamily::Ed, 0, phi);
}

StateVector evolve(const KappaSpec& spec, const StateVector& state, double t) {
  Vector out = state.amps;
  const FockSpace& fs = *state.space;
  for (Index j = 0; j < fs.dim(); ++j) out(j) *= std::polar(1.0, -energy(spec, fs.state(j)) * t);
  return {std::move(out), state.space, state.label};
}

Complex overlap_formula(const KappaSpec& spec, PhaseFamily family, int l, long long m, double phi, int l2,
                        long long m2, double phi2) {
  if (family == PhaseFamily::Ed) return l == l2 ? overlap_formula_Ed(spec, m, phi, m2, phi2) : Complex(0.0);
  require_block(spec, family, l);
  require_block(spec, family, l2);
  if (l != l2) return 0.0;
  const int s = block_size(spec, family, l);
  const long long dm = static_cast<long long>(canonical_m(m2, s)) - canonical_m(m, s);
  Complex sum = 0.0;
  // q^rho with rho = (m2 - m) n + (s / 2 pi)(phi - phi2) H: the integer part is
  // reduced exactly, the real part enters as an angle.
  for (int n = 0; n < s; ++n) {
    const double h = family == PhaseFamily::E3d ? energy(spec, l - n, n) : energy(spec, block_member(family, l, n));
    sum += root_of_unity(dm * n, s) * std::polar(1.0, (phi - phi2) * h);
  }
  return sum / static_cast<double>(s);
}

Complex overlap_formula_Ed(const KappaSpec& spec, long long m, double phi, long long m2, double phi2) {
  const int d = block_size(spec, PhaseFamily::Ed, 0);
  const long long dm = static_cast<long long>(canonical_m(m2, d)) - canonical_m(m, d);
  const int k = spec.k();
  Complex sum = 0.0;
  // tau = (m2 - m) j + (d / 2 pi)(phi - phi2) H(n, l), j = l(2k - l + 3)/2 + n.
  for (int l = 0; l <= k; ++l) {
    for (int n = 0; n <= k - l; ++n) {
      const long long j = static_cast<long long>(l) * (2 * k - l + 3) / 2 + n;
      sum += root_of_unity(dm * j, d) * std::polar(1.0, (phi - phi2) * energy(spec, n, l));
    }
  }
  return sum / static_cast<double>(d);
}

std::vector<VectorPhaseState> vector_phase_states(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family,
                                                  long long m, double phi) {
  if (family == PhaseFamily::Ed) throw std::invalid_argument("vector phase states are defined for E1d, E2d, E3d only");
  require_block(spec, family, 0);
  const int k = spec.k();
  std::vector<VectorPhaseState> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    const int mc = canonical_m(m, block_size(spec, family, l));
    VectorPhaseState v{family, l, mc, phi, {}};
    for (int line = 0; line <= k; ++line) {
      if (line == l) {
        v.blocks.push_back(phase_state(spec, space, family, l, mc, phi));
      } else {
        v.blocks.push_back({Vector::Zero(space->dim()), space, "0"});
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

Matrix block_diagonal_operator(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family) {
  if (family == PhaseFamily::Ed) throw std::invalid_argument("block_diagonal_operator: Ed has no blocks");
  const PhaseOperator op = build_phase_operator(spec, space, family);
  const Index d = space->dim();
  const auto lines = static_cast<Index>(op.block_ops.size());
  Matrix out = Matrix::Zero(lines * d, lines * d);
  for (Index l = 0; l < lines; ++l) out.block(l * d, l * d, d, d) = op.block_ops[static_cast<std::size_t>(l)].matrix;
  return out;
}

Vector stack(const VectorPhaseState& v) {
  if (v.blocks.empty()) return {};
  const Index d = v.blocks.front().amps.size();
  Vector out(d * static_cast<Index>(v.blocks.size()));
  for (std::size_t l = 0; l < v.blocks.size(); ++l) out.segment(static_cast<Index>(l) * d, d) = v.blocks[l].amps;
  return out;
}

QutritFixture qutrit_fixture(double phi) {
  const Complex up = std::polar(1.0, phi);
  const Complex down = std::polar(1.0, -phi);
  QutritFixture f{Matrix::Zero(3, 3), Matrix::Zero(3, 3), Matrix::Zero(3, 3), Matrix::Zero(3, 3)};
  // Index 0, 1, 2 stand for phi_1 = |0,0>, phi_2 = |1,0>, phi_3 = |0,1>.
  f.E13(0, 1) = up;
  f.E13(1, 0) = down;
  f.E13(2, 2) = 1.0;
  f.E23(0, 2) = up;
  f.E23(2, 0) = down;
  f.E23(1, 1) = 1.0;
  f.E33(1, 2) = 1.0;
  f.E33(2, 1) = 1.0;
  f.E33(0, 0) = 1.0;
  f.E3(0, 1) = up;
  f.E3(1, 2) = 1.0;
  f.E3(2, 0) = down;
  return f;
}

VerificationReport check_qutrit(double phi, double tolerance) {
  VerificationReport report;
  const KappaSpec spec = KappaSpec::negative(1, phi);
  const SpacePtr space = build_space(spec);
  const QutritFixture f = qutrit_fixture(phi);
  const Matrix id = Matrix::Identity(3, 3);
  report.add("k=1 E1d = E13", max_abs(build_E1d(spec, space).op.matrix - f.E13), tolerance);
  report.add("k=1 E2d = E23", max_abs(build_E2d(spec, space).op.matrix - f.E23), tolerance);
  report.add("k=1 E3d = E33", max_abs(build_E3d(spec, space).op.matrix - f.E33), tolerance);
  report.add("k=1 Ed = E3", max_abs(build_Ed(spec, space).op.matrix - f.E3), tolerance);
  report.add("E13^2 = E23^2 = I", std::max(max_abs(f.E13 * f.E13 - id), max_abs(f.E23 * f.E23 - id)), tolerance);
  report.add("E33 Hermitian and involutory",
             std::max(hermiticity_residual(f.E33), max_abs(f.E33 * f.E33 - id)), tolerance);
  return report;
}

VerificationReport check_phase_states(const KappaSpec& spec, const SpacePtr& space, double tolerance) {
  VerificationReport report;
  const FockSpace& fs = *space;
  const Index d = fs.dim();
  const int k = spec.k();
  const double phi = spec.phi();
  const double t = 0.3;
  const double phi_b = phi - 0.45;

  for (PhaseFamily fam : {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d, PhaseFamily::Ed}) {
    const std::string tag = to_string(fam);
    const PhaseOperator op = build_phase_operator(spec, space, fam);
    const int nblocks = fam == PhaseFamily::Ed ? 1 : k + 1;

    double eigen = 0.0;
    double equi = 0.0;
    double ortho = 0.0;
    double block_closure = 0.0;
    double stability = 0.0;
    double overlap = 0.0;
    Matrix closure = Matrix::Zero(d, d);

    for (int l = 0; l < nblocks; ++l) {
      const PhaseStateFamily family = phase_states(spec, space, fam, l, phi);
      const Matrix e = block_operator(op, fam, l);
      const int s = block_size(spec, fam, l);
      Matrix projector = Matrix::Zero(d, d);
      std::vector<Index> support;
      if (fam == PhaseFamily::Ed) {
        for (Index j = 0; j < d; ++j) support.push_back(j);
      } else {
        support = block_indices(spec, fs, fam, l);
      }
      for (Index j : support) projector(j, j) = 1.0;

      Matrix block_sum = Matrix::Zero(d, d);
      for (int m = 0; m < s; ++m) {
        const Vector& v = family.states[static_cast<std::size_t>(m)].amps;
        eigen = std::max(eigen, max_abs(e * v - std::polar(1.0, eigen_angle(spec, fam, l, m)) * v));
        const double expected = 1.0 / std::sqrt(static_cast<double>(s));
        for (Index j = 0; j < d; ++j) {
          const double target = projector(j, j).real() != 0.0 ? expected : 0.0;
          equi = std::max(equi, std::abs(std::abs(v(j)) - target));
        }
        block_sum += v * v.adjoint();

        const StateVector later = evolve(spec, family.states[static_cast<std::size_t>(m)], t);
        stability = std::max(stability, max_abs(later.amps - phase_state(spec, space, fam, l, m, phi + t).amps));

        for (int l2 = 0; l2 < nblocks; ++l2) {
          for (int m2 = 0; m2 < block_size(spec, fam, l2); ++m2) {
            const Vector w = phase_state(spec, space, fam, l2, m2, phi_b).amps;
            overlap = std::max(overlap, std::abs(v.dot(w) - overlap_formula(spec, fam, l, m, phi, l2, m2, phi_b)));
            if (l2 == l) {
              const Vector u = family.states[static_cast<std::size_t>(m2)].amps;
              ortho = std::max(ortho, std::abs(v.dot(u) - (m == m2 ? 1.0 : 0.0)));
            }
          }
        }
      }
      block_closure = std::max(block_closure, max_abs(block_sum - projector));
      closure += block_sum;
    }

    report.add(tag + " phase states: eigenvalue relation", eigen, tolerance);
    report.add(tag + " phase states: equiprobability", equi, tolerance);
    report.add(tag + " phase states: orthonormality", ortho, tolerance);
    if (fam != PhaseFamily::Ed) report.add(tag + " phase states: per-block closure", block_closure, tolerance);
    report.add(tag + " phase states: closure = I", max_abs(closure - Matrix::Identity(d, d)), tolerance);
    report.add(tag + " phase states: temporal stability", stability, tolerance);
    report.add(tag + " phase states: closed-form overlaps", overlap, tolerance);
  }

  // DFT consistency of the E3d states at phi = 0.
  double dft = 0.0;
  for (int l = 0; l <= k; ++l) {
    const PhaseStateFamily family = phase_states(spec, space, PhaseFamily::E3d, l, 0.0);
    const auto idx = block_indices(spec, fs, PhaseFamily::E3d, l);
    for (int m = 0; m <= l; ++m) {
      for (int n = 0; n <= l; ++n) {
        const Complex expected = root_of_unity(static_cast<long long>(m) * n, l + 1) / std::sqrt(l + 1.0);
        dft = std::max(dft, std::abs(family.states[static_cast<std::size_t>(m)].amps(idx[static_cast<std::size_t>(n)]) - expected));
      }
    }
  }
  report.add("E3d phase states at phi = 0 form the DFT", dft, tolerance);

  for (PhaseFamily fam : {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d}) {
    const std::string tag = to_string(fam);
    const Matrix big = block_diagonal_operator(spec, space, fam);
    double eigen = 0.0;
    bool one_line = true;
    Matrix closure = Matrix::Zero(d, d);
    for (int m = 0; m <= k; ++m) {
      for (const VectorPhaseState& v : vector_phase_states(spec, space, fam, m, phi)) {
        const Vector x = stack(v);
        eigen = std::max(eigen, max_abs(big * x - std::polar(1.0, eigen_angle(spec, fam, v.l, v.m)) * x));
        for (std::size_t line = 0; line < v.blocks.size(); ++line) {
          const bool nonzero = v.blocks[line].amps.norm() > 0.0;
          one_line &= nonzero == (static_cast<int>(line) == v.l);
        }
        // Distinct labels only: m runs over 0..k but block l has its own size.
        if (m < block_size(spec, fam, v.l)) {
          const Vector& line = v.blocks[static_cast<std::size_t>(v.l)].amps;
          closure += line * line.adjoint();
        }
      }
    }
    report.add(tag + " vector phase states: block-diagonal eigenvalue relation", eigen, tolerance);
    report.add(tag + " vector phase states: single nonzero line", one_line ? 0.0 : 1.0, tolerance);
    report.add(tag + " vector phase states: closure = I", max_abs(closure - Matrix::Identity(d, d)), tolerance);
  }
  return report;
}

}  // namespace phasekit
