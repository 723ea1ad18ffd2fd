// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace phasekit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default max-abs residual threshold for identity checks.
inline constexpr double kDefaultTolerance = 1e-10;

/// Which of the two Jacobson pairs a ladder operator belongs to.
enum class Mode { One = 1, Two = 2 };

enum class Sign { Plus, Minus };

/// e^{i 2π num / den}, with num reduced modulo den first so large exponents
/// keep full precision.
inline Complex root_of_unity(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
}

}  // namespace phasekit
