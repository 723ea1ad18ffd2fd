// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/types.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace phasekit {

/// Two-mode occupation |n1, n2>.
struct BasisState {
  int n1 = 0;
  int n2 = 0;

  [[nodiscard]] int total() const noexcept { return n1 + n2; }
  constexpr auto operator<=>(const BasisState&) const = default;
};

/// Whether the shell bound is the quenching index of a kappa < 0
/// representation or an artificial truncation window for kappa >= 0.
enum class ShellKind { Quenched, Window };

/**
 * Finite two-mode Fock basis {|n1, n2> : n1 + n2 <= shell}.
 *
 * States are ordered by Phi_j = |n, l> with j = l(2K - l + 3)/2 + n, i.e. the
 * outer loop runs over l = n2 and the inner loop over n = n1 (K = shell).
 */
class FockSpace {
 public:
  explicit FockSpace(int shell, ShellKind kind = ShellKind::Quenched);

  [[nodiscard]] Index dim() const noexcept { return static_cast<Index>(states_.size()); }
  [[nodiscard]] int shell() const noexcept { return shell_; }
  [[nodiscard]] ShellKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<BasisState>& states() const noexcept { return states_; }
  [[nodiscard]] const BasisState& state(Index j) const { return states_.at(static_cast<std::size_t>(j)); }

  [[nodiscard]] bool contains(int n1, int n2) const noexcept {
    return n1 >= 0 && n2 >= 0 && n1 + n2 <= shell_;
  }
  /// Phi index of |n1, n2>; throws std::out_of_range outside the shell.
  [[nodiscard]] Index index_of(int n1, int n2) const;
  [[nodiscard]] std::optional<Index> find(int n1, int n2) const noexcept;

  /// Diagonal matrix with f(n1, n2) on the diagonal.
  template <typename F>
  [[nodiscard]] Matrix diagonal(F&& f) const {
    Matrix m = Matrix::Zero(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m(j, j) = f(states_[static_cast<std::size_t>(j)]);
    return m;
  }

  [[nodiscard]] Matrix identity() const { return Matrix::Identity(dim(), dim()); }

  /// Projector onto states with n1 + n2 == n.
  [[nodiscard]] Matrix shell_projector(int n) const;

  bool operator==(const FockSpace& other) const noexcept {
    return shell_ == other.shell_ && kind_ == other.kind_;
  }

 private:
  int shell_;
  ShellKind kind_;
  std::vector<BasisState> states_;
};

using SpacePtr = std::shared_ptr<const FockSpace>;

inline SpacePtr make_space(int shell, ShellKind kind = ShellKind::Quenched) {
  return std::make_shared<const FockSpace>(shell, kind);
}

/// Dense operator on a FockSpace.
struct LinearOperator {
  LinearOperator(Matrix m, SpacePtr sp, std::string lbl);

  Matrix matrix;
  SpacePtr space;
  std::string label;

  [[nodiscard]] Index dim() const noexcept { return matrix.rows(); }
  [[nodiscard]] LinearOperator adjoint(std::string lbl) const { return {matrix.adjoint(), space, std::move(lbl)}; }
};

/// Amplitude vector over a FockSpace.
struct StateVector {
  StateVector(Vector v, SpacePtr sp, std::string lbl);

  Vector amps;
  SpacePtr space;
  std::string label;

  [[nodiscard]] Complex amplitude(int n1, int n2) const { return amps(space->index_of(n1, n2)); }
  [[nodiscard]] double norm() const { return amps.norm(); }
};

}  // namespace phasekit
