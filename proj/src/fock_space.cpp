// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/fock_space.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace phasekit {

FockSpace::FockSpace(int shell, ShellKind kind) : shell_(shell), kind_(kind) {
  if (shell < 0) throw std::invalid_argument("FockSpace: shell must be nonnegative");
  states_.reserve(static_cast<std::size_t>((shell + 1) * (shell + 2) / 2));
  for (int l = 0; l <= shell; ++l) {
    for (int n = 0; n <= shell - l; ++n) states_.push_back({n, l});
  }
}

std::optional<Index> FockSpace::find(int n1, int n2) const noexcept {
  if (!contains(n1, n2)) return std::nullopt;
  const long l = n2;
  return static_cast<Index>(l * (2L * shell_ - l + 3) / 2 + n1);
}

Index FockSpace::index_of(int n1, int n2) const {
  if (auto j = find(n1, n2)) return *j;
  throw std::out_of_range("|" + std::to_string(n1) + "," + std::to_string(n2) + "> lies outside the shell n1+n2<=" +
                          std::to_string(shell_));
}

Matrix FockSpace::shell_projector(int n) const {
  return diagonal([n](const BasisState& s) { return Complex(s.total() == n ? 1.0 : 0.0); });
}

LinearOperator::LinearOperator(Matrix m, SpacePtr sp, std::string lbl)
    : matrix(std::move(m)), space(std::move(sp)), label(std::move(lbl)) {
  if (!space) throw std::invalid_argument("LinearOperator '" + label + "': null space");
  if (matrix.rows() != space->dim() || matrix.cols() != space->dim()) {
    throw std::invalid_argument("LinearOperator '" + label + "': matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + " but space dimension is " +
                                std::to_string(space->dim()));
  }
}

StateVector::StateVector(Vector v, SpacePtr sp, std::string lbl)
    : amps(std::move(v)), space(std::move(sp)), label(std::move(lbl)) {
  if (!space) throw std::invalid_argument("StateVector '" + label + "': null space");
  if (amps.size() != space->dim()) {
    throw std::invalid_argument("StateVector '" + label + "': length " + std::to_string(amps.size()) +
                                " does not match space dimension " + std::to_string(space->dim()));
  }
}

}  // namespace phasekit
