// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace phasekit {

namespace {

bool within(double residual, double tolerance) { return std::isfinite(residual) && residual <= tolerance; }

}  // namespace

CheckEntry& VerificationReport::add(std::string name, double residual, double tolerance, std::string note) {
  return add(CheckEntry{std::move(name), residual, within(residual, tolerance), std::nullopt, std::move(note)});
}

CheckEntry& VerificationReport::add(CheckEntry entry) {
  entries_.push_back(std::move(entry));
  return entries_.back();
}

CheckEntry& VerificationReport::add_split(std::string name, ResidualSplit split, double tolerance, std::string note) {
  return add(CheckEntry{std::move(name), split.max(), within(split.interior, tolerance), split, std::move(note)});
}

CheckEntry& VerificationReport::add_split_strict(std::string name, ResidualSplit split, double tolerance,
                                                 std::string note) {
  const bool ok = within(split.interior, tolerance) && within(split.shell, tolerance);
  return add(CheckEntry{std::move(name), split.max(), ok, split, std::move(note)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (CheckEntry e : other.entries_) {
    e.name = prefix + e.name;
    entries_.push_back(std::move(e));
  }
}

const CheckEntry* VerificationReport::find(const std::string& name) const noexcept {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const CheckEntry& VerificationReport::at(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw std::out_of_range("no check named '" + name + "'");
}

bool VerificationReport::overall() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
}

double unitarity_residual(const Matrix& u) {
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return std::max(max_abs(u * u.adjoint() - id), max_abs(u.adjoint() * u - id));
}

double hermiticity_residual(const Matrix& h) { return max_abs(h - h.adjoint()); }

ResidualSplit split_by_columns(const Matrix& m, const FockSpace& space, int depth) {
  ResidualSplit out;
  const int boundary = space.shell() - depth;
  for (Index j = 0; j < m.cols(); ++j) {
    const double col = m.col(j).cwiseAbs().maxCoeff();
    double& slot = space.state(j).total() <= boundary ? out.interior : out.shell;
    slot = std::max(slot, col);
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace phasekit
