// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace phasekit {

/// phi = -pi (N-1) a / N.
[[nodiscard]] double quantized_phase(int N, int a);

/// Vector |a alpha> in C^N: the amplitude on |N-1-n> is q0^{n(N-n)a/2 + n alpha} / sqrt(N),
/// q0 = e^{2 pi i / N}. The exponent is reduced exactly before exponentiation.
[[nodiscard]] Vector mub_vector(int N, int a, int alpha);

/// Same vector obtained from the E1d(0) phase state at k = N-1 and the
/// quantized phi, with |n,0> relabelled as |N-1-n>.
[[nodiscard]] Vector mub_vector_e1route(int N, int a, int alpha);

/// Same vector obtained by applying exp(-i F3 phi), phi = -pi k^2 a / N, to
/// the E3d(N-1) phase state at phi = 0, with |l-n,n> relabelled as |N-1-n>.
[[nodiscard]] Vector mub_vector_e3route(int N, int a, int alpha);

struct GaussSumSpec {
  long long u = 0;
  long long v = 0;
  long long w = 1;
};

/// S(u, v, w) = sum_{j=0}^{|w|-1} exp(i pi (u j^2 + v j) / w), summed directly.
[[nodiscard]] Complex gauss_sum(const GaussSumSpec& spec);

/// <a alpha | b beta> = S(a-b, -(a-b)N - 2(alpha-beta), N) / N.
[[nodiscard]] Complex mub_overlap_formula(int N, int a, int alpha, int b, int beta);

[[nodiscard]] bool is_prime(long long n);

enum class MubRoute { E1, E3 };
std::string to_string(MubRoute route);
MubRoute mub_route_from_string(const std::string& name);

/// Orthonormal basis stored column-wise.
struct Basis {
  std::string label;
  Matrix vectors;
};

struct MubCertificate {
  /// Worst | |<u|v>| - 1/sqrt(N) | over vectors from distinct bases.
  double max_deviation = 0.0;
  /// Worst deviation of a basis from orthonormality.
  double max_orthonormality = 0.0;
  /// Number of distinct basis pairs compared.
  long long pairs_checked = 0;
  bool prime = false;
  /// Basis index pairs (into MubSet::bases) that fail unbiasedness.
  std::vector<std::pair<int, int>> failing_pairs;
};

/**
 * B_N (index 0) followed by B_{0a}, a = 0..N-1 (index a+1).
 *
 * overlap_table(i, j) is the worst deviation of |<u|v>| from 1/sqrt(N) for
 * i != j and the orthonormality residual of basis i on the diagonal.
 */
struct MubSet {
  int N = 0;
  MubRoute route = MubRoute::E1;
  std::vector<Basis> bases;
  RealMatrix overlap_table;
  MubCertificate certificate;

  /// True when N is prime and every cross pair passes within tolerance.
  [[nodiscard]] bool is_complete(double tolerance = kDefaultTolerance) const;
};

/// Composite N yields the same family with its failing pairs listed.
[[nodiscard]] MubSet build_mub_set(int N, MubRoute route = MubRoute::E1, double tolerance = kDefaultTolerance);

/// Overlap formula against direct products, route equivalence, unitarity,
/// computational-basis overlaps and (prime N) unbiasedness.
[[nodiscard]] VerificationReport check_mub(int N, double tolerance = kDefaultTolerance);

}  // namespace phasekit
