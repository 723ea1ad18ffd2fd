// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/report.hpp"
#include "phasekit/types.hpp"

#include <cstdint>
#include <vector>

namespace phasekit {

struct VerifyConfig {
  /// kappa = -1/k for the finite representation checks.
  int k = 3;
  double phi = 0.0;
  /// kappa >= 0 values run on a window of size sigma.
  std::vector<double> window_kappas = {0.0, 0.5, 1.0};
  int sigma = 4;
  /// MUB dimension; prime for a complete set.
  int mub_N = 5;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  /// Randomized overlap and temporal-stability draws.
  int draws = 20;
};

/// Runs every module check for the configuration. Entry names are prefixed
/// with the module they come from.
[[nodiscard]] VerificationReport verify_all(const VerifyConfig& config);

}  // namespace phasekit
