// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/fock_space.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/report.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

using namespace phasekit;

TEST(KappaSpec, NegativeIsExactReciprocal) {
  const KappaSpec s = KappaSpec::negative(3);
  EXPECT_EQ(s.kappa(), -1.0 / 3);
  EXPECT_EQ(s.regime(), Regime::NegativeFinite);
  EXPECT_EQ(s.k(), 3);
  EXPECT_EQ(s.shell(), 3);
  EXPECT_FALSE(s.sigma().has_value());
}

TEST(KappaSpec, ShellFactorVanishesExactly) {
  for (int k = 1; k <= 12; ++k) {
    const KappaSpec s = KappaSpec::negative(k);
    EXPECT_EQ(s.one_plus_kappa_times(k), 0.0) << k;
    EXPECT_EQ(s.one_plus_kappa_times(0), 1.0);
  }
}

TEST(KappaSpec, FromKappaAcceptsOnlyReciprocalIntegers) {
  EXPECT_EQ(KappaSpec::from_kappa(-0.5, std::nullopt).k(), 2);
  EXPECT_EQ(KappaSpec::from_kappa(-1.0 / 7, std::nullopt).k(), 7);
  EXPECT_THROW((void)KappaSpec::from_kappa(-0.3, std::nullopt), std::invalid_argument);
  EXPECT_THROW((void)KappaSpec::from_kappa(-2.0, std::nullopt), std::invalid_argument);
  EXPECT_THROW((void)KappaSpec::from_kappa(0.5, std::nullopt), std::invalid_argument);
  const KappaSpec w = KappaSpec::from_kappa(0.5, 6);
  EXPECT_EQ(w.regime(), Regime::Positive);
  EXPECT_EQ(*w.sigma(), 6);
  EXPECT_EQ(KappaSpec::from_kappa(0.0, 2).regime(), Regime::Zero);
}

TEST(KappaSpec, RejectsBadWindows) {
  EXPECT_THROW((void)KappaSpec::non_negative(0.5, 0), std::invalid_argument);
  EXPECT_THROW((void)KappaSpec::non_negative(-0.5, 3), std::invalid_argument);
  EXPECT_THROW((void)KappaSpec::negative(-1), std::invalid_argument);
  EXPECT_THROW((void)KappaSpec::non_negative(1.0, 3).k(), std::logic_error);
}

TEST(FockSpace, DimensionIsTriangular) {
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(FockSpace(k).dim(), (k + 1) * (k + 2) / 2);
  EXPECT_EQ(FockSpace(1).dim(), 3);
  EXPECT_EQ(FockSpace(2).dim(), 6);
  EXPECT_EQ(FockSpace(3).dim(), 10);
}

TEST(FockSpace, OrderingMatchesLinearIndex) {
  for (int k = 0; k <= 8; ++k) {
    const FockSpace fs(k);
    std::set<std::pair<int, int>> seen;
    for (int l = 0; l <= k; ++l) {
      for (int n = 0; n <= k - l; ++n) {
        const Index j = l * (2 * k - l + 3) / 2 + n;
        EXPECT_EQ(fs.state(j).n1, n);
        EXPECT_EQ(fs.state(j).n2, l);
        EXPECT_EQ(fs.index_of(n, l), j);
        seen.insert({n, l});
      }
    }
    EXPECT_EQ(static_cast<Index>(seen.size()), fs.dim());
  }
}

TEST(FockSpace, LookupOutsideShellThrows) {
  const FockSpace fs(2);
  EXPECT_THROW((void)fs.index_of(2, 1), std::out_of_range);
  EXPECT_THROW((void)fs.index_of(-1, 0), std::out_of_range);
  EXPECT_FALSE(fs.find(3, 0).has_value());
}

TEST(FockSpace, OperatorDimensionsAreValidated) {
  const SpacePtr sp = make_space(2);
  EXPECT_THROW(LinearOperator(Matrix::Zero(5, 5), sp, "x"), std::invalid_argument);
  EXPECT_THROW(StateVector(Vector::Zero(5), sp, "x"), std::invalid_argument);
  EXPECT_NO_THROW(LinearOperator(Matrix::Zero(6, 6), sp, "x"));
}

TEST(Report, OverallIsConjunction) {
  VerificationReport r;
  r.add("a", 1e-14, 1e-10);
  EXPECT_TRUE(r.overall());
  r.add("b", 1e-3, 1e-10);
  EXPECT_FALSE(r.overall());
  EXPECT_FALSE(r.at("b").pass);
  EXPECT_THROW((void)r.at("c"), std::out_of_range);
}

TEST(Report, NaNNeverPasses) {
  VerificationReport r;
  r.add("nan", std::numeric_limits<double>::quiet_NaN(), 1.0);
  EXPECT_FALSE(r.overall());
}

TEST(Report, SplitVariants) {
  VerificationReport r;
  r.add_split("loose", {1e-15, 0.5}, 1e-10);
  r.add_split_strict("strict", {1e-15, 0.5}, 1e-10);
  EXPECT_TRUE(r.at("loose").pass);
  EXPECT_FALSE(r.at("strict").pass);
  EXPECT_DOUBLE_EQ(r.at("loose").max_residual, 0.5);
}
