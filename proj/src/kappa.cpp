// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/kappa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace phasekit {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::NegativeFinite: return "negative";
    case Regime::Zero: return "zero";
    case Regime::Positive: return "positive";
  }
  return "unknown";
}

KappaSpec KappaSpec::negative(int k, double phi) {
  if (k < 0) throw std::invalid_argument("k must be a nonnegative integer, got " + std::to_string(k));
  const double kappa = k == 0 ? -std::numeric_limits<double>::infinity() : -1.0 / k;
  return KappaSpec(kappa, Regime::NegativeFinite, k, std::nullopt, phi);
}

KappaSpec KappaSpec::non_negative(double kappa, int sigma, double phi) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("non_negative: kappa must be finite and >= 0");
  }
  if (sigma < 1) throw std::invalid_argument("sigma must be a positive integer, got " + std::to_string(sigma));
  return KappaSpec(kappa, kappa == 0.0 ? Regime::Zero : Regime::Positive, sigma, sigma, phi);
}

KappaSpec KappaSpec::from_kappa(double kappa, std::optional<int> sigma, double phi) {
  if (!std::isfinite(kappa)) throw std::invalid_argument("kappa must be finite");
  if (kappa >= 0.0) {
    if (!sigma) throw std::invalid_argument("kappa >= 0 requires a truncation order sigma");
    return non_negative(kappa, *sigma, phi);
  }
  const double inv = -1.0 / kappa;
  const double k = std::round(inv);
  if (k < 1.0 || k > 1e6 || -1.0 / k != kappa) {
    throw std::invalid_argument("kappa < 0 requires -1/kappa to be a positive integer, got kappa = " +
                                std::to_string(kappa));
  }
  return negative(static_cast<int>(k), phi);
}

int KappaSpec::k() const {
  if (regime_ != Regime::NegativeFinite) throw std::logic_error("k() is only defined for kappa < 0");
  return shell_;
}

KappaSpec KappaSpec::with_phi(double phi) const {
  KappaSpec copy = *this;
  copy.phi_ = phi;
  return copy;
}

KappaSpec KappaSpec::with_sigma(int sigma) const {
  if (regime_ == Regime::NegativeFinite) throw std::logic_error("with_sigma: kappa < 0 has no window");
  return non_negative(kappa_, sigma, phi_);
}

double KappaSpec::one_plus_kappa_times(long m) const {
  if (m == 0) return 1.0;
  if (regime_ == Regime::NegativeFinite) {
    if (shell_ == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(shell_ - m) / static_cast<double>(shell_);
  }
  return 1.0 + kappa_ * static_cast<double>(m);
}

}  // namespace phasekit
