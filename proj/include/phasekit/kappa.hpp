// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

namespace phasekit {

enum class Regime { NegativeFinite, Zero, Positive };

std::string to_string(Regime r);

/**
 * Deformation parameter of the algebra together with its regime.
 *
 * Negative values are only constructible from the integer k = -1/kappa so the
 * quenched shell n1 + n2 = k is never subject to floating-point rounding.
 * Non-negative values always carry a truncation order sigma.
 */
class KappaSpec {
 public:
  /// kappa = -1/k. k = 0 is accepted as a one-state degenerate fixture.
  static KappaSpec negative(int k, double phi = 0.0);

  /// kappa >= 0 on the window n1 + n2 <= sigma (sigma >= 1).
  static KappaSpec non_negative(double kappa, int sigma, double phi = 0.0);

  /// Generic entry point used by front ends taking a raw kappa value.
  /// Negative kappa must satisfy -1/kappa == k exactly for an integer k.
  static KappaSpec from_kappa(double kappa, std::optional<int> sigma, double phi = 0.0);

  [[nodiscard]] double kappa() const noexcept { return kappa_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }
  [[nodiscard]] double phi() const noexcept { return phi_; }
  [[nodiscard]] std::optional<int> sigma() const noexcept { return sigma_; }

  /// k for the negative regime; throws std::logic_error otherwise.
  [[nodiscard]] int k() const;

  /// Shell bound of the finite basis: k (kappa < 0) or sigma (kappa >= 0).
  [[nodiscard]] int shell() const noexcept { return shell_; }

  [[nodiscard]] bool is_negative() const noexcept { return regime_ == Regime::NegativeFinite; }

  [[nodiscard]] KappaSpec with_phi(double phi) const;
  [[nodiscard]] KappaSpec with_sigma(int sigma) const;

  /// 1 + kappa * m, evaluated as (k - m) / k in the negative regime so that
  /// the value is exactly zero at m = k.
  [[nodiscard]] double one_plus_kappa_times(long m) const;

 private:
  KappaSpec(double kappa, Regime regime, int shell, std::optional<int> sigma, double phi)
      : kappa_(kappa), regime_(regime), shell_(shell), sigma_(sigma), phi_(phi) {}

  double kappa_;
  Regime regime_;
  int shell_;
  std::optional<int> sigma_;
  double phi_;
};

}  // namespace phasekit
