// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <vector>

namespace phasekit {

/// F_i(n1, n2) = n_i [1 + kappa (n1 + n2 - 1)] for a raw kappa.
/// Throws std::domain_error when the value is negative beyond 1e-12.
[[nodiscard]] double structure_function(int i, int n1, int n2, double kappa);

/// Same, with the shell factor evaluated exactly for kappa = -1/k.
[[nodiscard]] double structure_function(const KappaSpec& spec, Mode i, int n1, int n2);

/// H(n1, n2) = (n1 + n2) [1 + kappa (n1 + n2 - 1)].
[[nodiscard]] double energy(const KappaSpec& spec, int n1, int n2);
[[nodiscard]] inline double energy(const KappaSpec& spec, const BasisState& s) { return energy(spec, s.n1, s.n2); }

/// Fock basis n1 + n2 <= k (kappa < 0) or n1 + n2 <= sigma (kappa >= 0).
[[nodiscard]] SpacePtr build_space(const KappaSpec& spec);

/// a_i^+ / a_i^- with the phi-dependent phases; matrix elements leading
/// outside the space are dropped.
[[nodiscard]] LinearOperator ladder(const KappaSpec& spec, const SpacePtr& space, Mode i, Sign sign);

[[nodiscard]] LinearOperator number_operator(const SpacePtr& space, Mode i);

/// a_3^+ = [a_2^+, a_1^-] and a_3^- = [a_1^+, a_2^-]. On a truncation window
/// the commutator is formed one shell further out and restricted back, so the
/// result is the exact matrix of the untruncated operator.
[[nodiscard]] LinearOperator ladder3(const KappaSpec& spec, const SpacePtr& space, Sign sign);

/// Closed form a_3^+|n1,n2> = -kappa sqrt(n1(n2+1)) |n1-1,n2+1> and its adjoint.
[[nodiscard]] LinearOperator ladder3_closed_form(const KappaSpec& spec, const SpacePtr& space, Sign sign);

[[nodiscard]] LinearOperator hamiltonian(const KappaSpec& spec, const SpacePtr& space);

/// Diagonal exp(-i H t).
[[nodiscard]] Matrix propagator(const KappaSpec& spec, const FockSpace& space, double t);

/// diag sqrt(F_i(N1, N2)) for i = 1, 2.
[[nodiscard]] Matrix sqrt_structure(const KappaSpec& spec, const FockSpace& space, Mode i);

/// diag |kappa| sqrt((N1 + 1) N2), the square root of F_3.
[[nodiscard]] Matrix sqrt_structure3(const KappaSpec& spec, const FockSpace& space);

/// {E+1, E-1, E+2, E-2, E+3, E-3, H1, H2}. Rejects kappa = 0.
[[nodiscard]] std::vector<LinearOperator> lie_generators(const KappaSpec& spec, const SpacePtr& space);

/// Largest least-squares residual of a pairwise generator commutator against
/// the span of the eight generators. On a truncation window the products are
/// evaluated one shell further out and restricted to the window.
[[nodiscard]] double lie_closure_residual(const KappaSpec& spec);

/// Defining relations of the algebra as matrix identities. Residuals are split
/// into interior columns and boundary-shell columns. For kappa < 0 both parts
/// must pass; on a kappa >= 0 window only the interior is required.
[[nodiscard]] VerificationReport check_algebra(const KappaSpec& spec, const SpacePtr& space,
                                               double tolerance = kDefaultTolerance);

/// Hermiticity pairing, spectrum, a_3 consistency, H = sum a+ a-, and
/// phi-covariance of the ladder operators.
[[nodiscard]] VerificationReport check_representation(const KappaSpec& spec, const SpacePtr& space,
                                                      double tolerance = kDefaultTolerance);

/// Restriction of an operator on `from` to the basis of `to` (shell(to) <= shell(from)).
[[nodiscard]] Matrix restrict_to(const Matrix& m, const FockSpace& from, const FockSpace& to);

/// Zero-padded embedding of an operator on `from` into the larger `to`.
[[nodiscard]] Matrix embed_into(const Matrix& m, const FockSpace& from, const FockSpace& to);

}  // namespace phasekit
