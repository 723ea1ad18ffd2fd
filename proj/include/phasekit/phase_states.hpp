// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <optional>
#include <vector>

namespace phasekit {

/// Eigenstates of one phase operator block (or of Ed) at fixed phi, indexed by m.
struct PhaseStateFamily {
  PhaseFamily family;
  std::optional<int> l;
  double phi = 0.0;
  std::vector<StateVector> states;
};

/// Column of k+1 states; only line l is nonzero.
struct VectorPhaseState {
  PhaseFamily family;
  int l = 0;
  int m = 0;
  double phi = 0.0;
  std::vector<StateVector> blocks;
};

/// Number of eigenstates in block l: k-l+1 (E1d, E2d), l+1 (E3d), d (Ed).
[[nodiscard]] int block_size(const KappaSpec& spec, PhaseFamily family, int l);

/// m reduced into {0, ..., size-1}.
[[nodiscard]] int canonical_m(long long m, int size);

/// Eigenvalue angle 2 pi m / size of the state labelled (l, m).
[[nodiscard]] double eigen_angle(const KappaSpec& spec, PhaseFamily family, int l, long long m);

/// |l,m,phi> for E1d / E2d / E3d, |m,phi> for Ed (l ignored). Built from the
/// closed-form sums; phi is taken from the argument, not from spec.
[[nodiscard]] StateVector phase_state(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family, int l,
                                      long long m, double phi);

[[nodiscard]] PhaseStateFamily phase_states(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family, int l,
                                            double phi);
[[nodiscard]] PhaseStateFamily phase_states_E1(const KappaSpec& spec, const SpacePtr& space, int l, double phi);
[[nodiscard]] PhaseStateFamily phase_states_E2(const KappaSpec& spec, const SpacePtr& space, int l, double phi);
[[nodiscard]] PhaseStateFamily phase_states_E3(const KappaSpec& spec, const SpacePtr& space, int l, double phi);
[[nodiscard]] PhaseStateFamily phase_states_Ed(const KappaSpec& spec, const SpacePtr& space, double phi);

/// exp(-i H t) applied to the state.
[[nodiscard]] StateVector evolve(const KappaSpec& spec, const StateVector& state, double t);

/// <l,m,phi | l2,m2,phi2> from the rho sum (E1d, E2d) or its E3d analogue.
[[nodiscard]] Complex overlap_formula(const KappaSpec& spec, PhaseFamily family, int l, long long m, double phi, int l2,
                                      long long m2, double phi2);

/// <m,phi | m2,phi2> from the tau sum.
[[nodiscard]] Complex overlap_formula_Ed(const KappaSpec& spec, long long m, double phi, long long m2, double phi2);

/// The k+1 vector phase states [l, m, phi], l = 0..k, for E1d, E2d or E3d.
[[nodiscard]] std::vector<VectorPhaseState> vector_phase_states(const KappaSpec& spec, const SpacePtr& space,
                                                                PhaseFamily family, long long m, double phi);

/// diag(E(0), ..., E(k)) acting on stacked (k+1) d vectors.
[[nodiscard]] Matrix block_diagonal_operator(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family);

/// Concatenation of the k+1 lines into one vector.
[[nodiscard]] Vector stack(const VectorPhaseState& v);

/// The four 3 x 3 matrices written out for k = 1 on (|0,0>, |1,0>, |0,1>).
struct QutritFixture {
  Matrix E13;
  Matrix E23;
  Matrix E33;
  Matrix E3;
};
[[nodiscard]] QutritFixture qutrit_fixture(double phi);

/// k = 1 phase operators against the fixture, plus E13^2 = I and E33
/// Hermitian and involutory.
[[nodiscard]] VerificationReport check_qutrit(double phi, double tolerance = kDefaultTolerance);

/// Eigen-relations, equiprobability, orthonormality, closure, temporal
/// stability, overlap sums and vector phase states for every family.
[[nodiscard]] VerificationReport check_phase_states(const KappaSpec& spec, const SpacePtr& space,
                                                    double tolerance = kDefaultTolerance);

}  // namespace phasekit
