// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <array>

namespace phasekit {

/**
 * Finite stand-in for the kappa >= 0 Fock space.
 *
 * `space` is the window n1 + n2 <= sigma on which all truncated objects live.
 * `host` is a larger window (sigma + 2) used to form untruncated products,
 * and `projector` is Pi_sigma written on the host.
 */
struct Window {
  int sigma;
  SpacePtr space;
  SpacePtr host;
  LinearOperator projector;
};

/// Rejects kappa < 0. Uses spec.sigma().
[[nodiscard]] Window make_window(const KappaSpec& spec);

/// {b1+, b1-, b2+, b2-} with b = Pi_sigma a Pi_sigma, written on the window.
[[nodiscard]] std::array<LinearOperator, 4> build_truncated_ladders(const KappaSpec& spec, const Window& window);

/// Modified commutators with their boundary dyads, number relations, mixed
/// commutators, triple relations (interior plus exact boundary defect), and
/// consistency of b with a.
[[nodiscard]] VerificationReport check_truncated_algebra(const KappaSpec& spec, const Window& window,
                                                         double tolerance = kDefaultTolerance);

/// Windowed shift operators. which = 1, 2: e^{i[H(n+e_i) - H(n)] phi} |n><n+e_i|.
/// which = 3: |n1+1,n2><n1,n2+1| (no phase).
[[nodiscard]] LinearOperator build_Einf(const KappaSpec& spec, const Window& window, int which);

/// Non-unitarity relations with their windowing defects, E3 = E1^dagger E2,
/// polar decompositions, partial isometry and norm bounds.
[[nodiscard]] VerificationReport check_Einf(const KappaSpec& spec, const Window& window,
                                            double tolerance = kDefaultTolerance);

/// Unnormalized |theta1, theta2, phi) truncated to the window.
struct ThetaState {
  double theta1;
  double theta2;
  double phi;
  StateVector state;
};

[[nodiscard]] ThetaState theta_state(const KappaSpec& spec, const Window& window, double theta1, double theta2,
                                     double phi);

/// Eigen-relation residuals of E1, E2 and E3 on a theta state, split into
/// interior and edge components. For E1 and E2 the edge is the shell
/// n1 + n2 = sigma; for E3 it is the n1 = 0 column.
struct ThetaResiduals {
  ResidualSplit e1;
  ResidualSplit e2;
  ResidualSplit e3;
};
[[nodiscard]] ThetaResiduals theta_residuals(const KappaSpec& spec, const Window& window, const ThetaState& s);

/// Average of |theta)(theta| over the uniform G x G grid theta_j = -pi + 2 pi j / G.
[[nodiscard]] Matrix quadrature_average(const KappaSpec& spec, const Window& window, double phi, int grid);

/// Single-entry report comparing the grid average with the identity. Exact
/// once grid > sigma; smaller grids alias.
[[nodiscard]] VerificationReport quadrature_closure(const KappaSpec& spec, const Window& window, double phi, int grid,
                                                    double tolerance = kDefaultTolerance);

}  // namespace phasekit
