// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phasekit {

/// Residual restricted to input states off the boundary shell vs. on it.
struct ResidualSplit {
  double interior = 0.0;
  double shell = 0.0;

  [[nodiscard]] double max() const noexcept { return interior > shell ? interior : shell; }
};

struct CheckEntry {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
  std::optional<ResidualSplit> split;
  std::string note;
};

/// Ordered list of identity checks; overall() is the conjunction of passes.
class VerificationReport {
 public:
  CheckEntry& add(std::string name, double residual, double tolerance, std::string note = {});
  CheckEntry& add(CheckEntry entry);
  /// Passes when the interior residual is within tolerance; shell residual is
  /// recorded only.
  CheckEntry& add_split(std::string name, ResidualSplit split, double tolerance, std::string note = {});
  /// Passes only when both interior and shell residuals are within tolerance.
  CheckEntry& add_split_strict(std::string name, ResidualSplit split, double tolerance, std::string note = {});

  void append(const VerificationReport& other, const std::string& prefix = {});

  [[nodiscard]] const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] const CheckEntry& at(const std::string& name) const;
  [[nodiscard]] const CheckEntry* find(const std::string& name) const noexcept;
  [[nodiscard]] bool overall() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<CheckEntry> entries_;
};

// Residual helpers. All are max-abs over matrix or vector entries.

template <typename Derived>
[[nodiscard]] double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
[[nodiscard]] double unitarity_residual(const Matrix& u);
[[nodiscard]] double hermiticity_residual(const Matrix& h);

/// Splits the residual of `m` by its columns: columns whose basis state has
/// n1 + n2 <= boundary - depth count as interior, the rest as shell.
[[nodiscard]] ResidualSplit split_by_columns(const Matrix& m, const FockSpace& space, int depth = 1);

[[nodiscard]] Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace phasekit
