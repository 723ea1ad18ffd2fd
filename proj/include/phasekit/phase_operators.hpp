// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <string>
#include <vector>

namespace phasekit {

/// A: rows |n,l> (n2 fixed). B: columns |l,n> (n1 fixed). C: diagonals |l-n,n>.
enum class PartitionKind { A, B, C };

enum class PhaseFamily { E1d, E2d, E3d, Ed };

std::string to_string(PartitionKind kind);
std::string to_string(PhaseFamily family);
PhaseFamily phase_family_from_string(const std::string& name);

/// Direct-sum decomposition of a quenched space; blocks[l] holds Phi indices.
struct Partition {
  PartitionKind kind;
  std::vector<std::vector<Index>> blocks;
};

struct PhaseOperator {
  LinearOperator op;
  PhaseFamily family;
  /// E_id(l), each a full d x d matrix supported on block l. Empty for Ed.
  std::vector<LinearOperator> block_ops;
};

/// Rejects kappa >= 0 and window spaces.
[[nodiscard]] Partition build_partition(const KappaSpec& spec, const SpacePtr& space, PartitionKind kind);

/// Block-cyclic |n1,n2> -> |n1-1,n2>, with |0,l> -> |k-l,l>.
[[nodiscard]] PhaseOperator build_E1d(const KappaSpec& spec, const SpacePtr& space);
/// Block-cyclic |n1,n2> -> |n1,n2-1>, with |l,0> -> |l,k-l>.
[[nodiscard]] PhaseOperator build_E2d(const KappaSpec& spec, const SpacePtr& space);
/// Phase-free |n1,n2> -> |n1+1,n2-1>, with |l,0> -> |0,l>.
[[nodiscard]] PhaseOperator build_E3d(const KappaSpec& spec, const SpacePtr& space);
/// Full cycle Phi_j -> Phi_{j-1}, Phi_0 -> Phi_{d-1}.
[[nodiscard]] PhaseOperator build_Ed(const KappaSpec& spec, const SpacePtr& space);

[[nodiscard]] PhaseOperator build_phase_operator(const KappaSpec& spec, const SpacePtr& space, PhaseFamily family);

/// Largest wrap-aware angular distance between the eigenvalues of `m` and the
/// expected unit-circle angles, after sorting both.
[[nodiscard]] double spectrum_distance(const Matrix& m, std::vector<double> expected_angles);

/// Number of applications of `op` needed to bring basis vector `start` back to
/// its own ray, or -1 if some image is not a single basis ray.
[[nodiscard]] int orbit_length(const Matrix& op, Index start, double tolerance = kDefaultTolerance);

/// a_i^- = E_id sqrt(F_i) and a_i^+ = sqrt(F_i) E_id^dagger for i = 1, 2, 3.
[[nodiscard]] VerificationReport check_polar(const KappaSpec& spec, const SpacePtr& space,
                                             double tolerance = kDefaultTolerance);

/// Unitarity, block structure, Ed spectrum and orbit.
[[nodiscard]] VerificationReport check_phase_operators(const KappaSpec& spec, const SpacePtr& space,
                                                       double tolerance = kDefaultTolerance);

}  // namespace phasekit
