// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/mub.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace phasekit;

namespace {

Vector vector_oracle(int N, int a, int alpha) {
  Vector v = Vector::Zero(N);
  for (int n = 0; n < N; ++n) {
    const long double expo = static_cast<long double>(n) * (N - n) * a / 2.0L + static_cast<long double>(n) * alpha;
    const long double ang = 2.0L * 3.14159265358979323846264338327950288L * expo / N;
    v(N - 1 - n) = Complex(static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))) / std::sqrt(double(N));
  }
  return v;
}

Complex gauss_oracle(long long u, long long v, long long w) {
  Complex s = 0.0;
  for (long long k = 0; k < std::llabs(w); ++k) {
    const long double ang = 3.14159265358979323846264338327950288L * static_cast<long double>(u * k * k + v * k) / w;
    s += Complex(static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang)));
  }
  return s;
}

}  // namespace

TEST(QuantizedPhase, Examples) {
  EXPECT_EQ(quantized_phase(5, 0), 0.0);
  EXPECT_NEAR(quantized_phase(3, 1), -2.0 * kPi / 3.0, 1e-15);
  EXPECT_NEAR(quantized_phase(2, 1), -kPi / 2.0, 1e-15);
}

TEST(MubVector, QubitDft) {
  const double r = 1.0 / std::sqrt(2.0);
  const Vector v0 = mub_vector(2, 0, 0);
  const Vector v1 = mub_vector(2, 0, 1);
  EXPECT_LT(std::abs(v0(0) - r) + std::abs(v0(1) - r), 1e-15);
  EXPECT_LT(std::abs(v1(1) - r) + std::abs(v1(0) + r), 1e-15);
}

TEST(MubVector, UniformAtOrigin) {
  for (int N = 2; N <= 9; ++N) {
    const Vector v = mub_vector(N, 0, 0);
    for (Index j = 0; j < N; ++j) EXPECT_NEAR(std::abs(v(j) - 1.0 / std::sqrt(double(N))), 0.0, 1e-15);
  }
}

TEST(MubVector, MatchesDirectExponentials) {
  for (int N : {2, 3, 4, 5, 6, 7, 11, 13})
    for (int a = 0; a < N; ++a)
      for (int alpha = 0; alpha < N; ++alpha) EXPECT_LT(max_abs(mub_vector(N, a, alpha) - vector_oracle(N, a, alpha)), 1e-12);
}

TEST(MubVector, RoutesAgree) {
  for (int N : {2, 3, 5, 7}) {
    for (int a = 0; a < N; ++a) {
      for (int alpha = 0; alpha < N; ++alpha) {
        EXPECT_LT(max_abs(mub_vector_e1route(N, a, alpha) - mub_vector(N, a, alpha)), 1e-12) << N << a << alpha;
        EXPECT_LT(max_abs(mub_vector_e3route(N, a, alpha) - mub_vector(N, a, alpha)), 1e-12) << N << a << alpha;
      }
    }
  }
}

TEST(GaussSum, TrivialAndModulus) {
  for (int N = 1; N <= 9; ++N) EXPECT_LT(std::abs(gauss_sum({0, 0, N}) - Complex(N)), 1e-12);
  for (int N : {3, 5, 7, 11}) {
    for (int u = 1; u < N; ++u) {
      for (int v = -2 * N; v <= 2 * N; ++v) {
        if ((u * N + v) % 2 != 0) continue;
        EXPECT_NEAR(std::abs(gauss_sum({u, v, N})), std::sqrt(double(N)), 1e-12);
      }
    }
  }
}

TEST(GaussSum, MatchesDirectSum) {
  for (long long w : {1LL, 2LL, 4LL, 6LL, 9LL, -5LL})
    for (long long u = -3; u <= 7; ++u)
      for (long long v = -9; v <= 9; ++v) EXPECT_LT(std::abs(gauss_sum({u, v, w}) - gauss_oracle(u, v, w)), 1e-12);
  EXPECT_THROW((void)gauss_sum({1, 1, 0}), std::invalid_argument);
}

TEST(GaussSum, OverlapFormula) {
  for (int N : {2, 3, 4, 5, 7}) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int al = 0; al < N; ++al)
          for (int be = 0; be < N; ++be) {
            const Complex direct = mub_vector(N, a, al).dot(mub_vector(N, b, be));
            EXPECT_LT(std::abs(direct - mub_overlap_formula(N, a, al, b, be)), 1e-12);
          }
  }
}

TEST(Primes, Small) {
  std::set<int> primes;
  for (int n = 0; n < 60; ++n) if (is_prime(n)) primes.insert(n);
  EXPECT_EQ(primes, (std::set<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
}

TEST(MubSet, PrimeDimensionsAreComplete) {
  for (int N : {2, 3, 5, 7, 11, 13}) {
    for (MubRoute route : {MubRoute::E1, MubRoute::E3}) {
      const MubSet set = build_mub_set(N, route);
      ASSERT_EQ(static_cast<int>(set.bases.size()), N + 1);
      EXPECT_TRUE(set.is_complete());
      EXPECT_LT(set.certificate.max_deviation, 1e-10);
      EXPECT_TRUE(set.certificate.failing_pairs.empty());
      EXPECT_EQ(set.certificate.pairs_checked, static_cast<long long>(N + 1) * N / 2);
      // Independent sweep of every cross-basis overlap.
      double worst = 0.0;
      for (std::size_t i = 0; i < set.bases.size(); ++i)
        for (std::size_t j = i + 1; j < set.bases.size(); ++j) {
          const Matrix g = set.bases[i].vectors.adjoint() * set.bases[j].vectors;
          worst = std::max(worst, (g.cwiseAbs().array() - 1.0 / std::sqrt(double(N))).abs().maxCoeff());
        }
      EXPECT_LT(worst, 1e-10);
    }
  }
}

TEST(MubSet, SevenHasEightBases) {
  const MubSet set = build_mub_set(7);
  EXPECT_EQ(set.bases.size(), 8u);
  EXPECT_LT(set.certificate.max_deviation, 1e-10);
}

TEST(MubSet, FourFlagsEvenDifferencePairs) {
  const MubSet set = build_mub_set(4);
  EXPECT_FALSE(set.is_complete());
  EXPECT_FALSE(set.certificate.prime);
  std::set<std::pair<int, int>> failing(set.certificate.failing_pairs.begin(), set.certificate.failing_pairs.end());
  std::set<std::pair<int, int>> expected;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      double dev = 0.0;
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be)
          dev = std::max(dev, std::abs(std::abs(vector_oracle(4, a, al).dot(vector_oracle(4, b, be))) - 0.5));
      if (dev > 1e-10) expected.insert({a + 1, b + 1});
    }
  EXPECT_EQ(failing, expected);
  EXPECT_EQ(expected, (std::set<std::pair<int, int>>{{1, 3}, {2, 4}}));
}

TEST(MubSet, RouteNames) {
  EXPECT_EQ(mub_route_from_string("e3"), MubRoute::E3);
  EXPECT_EQ(to_string(MubRoute::E1), "e1");
  EXPECT_THROW((void)mub_route_from_string("x"), std::invalid_argument);
  EXPECT_THROW((void)build_mub_set(1), std::invalid_argument);
}

TEST(MubSet, CheckReport) {
  for (int N : {2, 3, 5, 7}) EXPECT_TRUE(check_mub(N).overall()) << N;
  EXPECT_TRUE(check_mub(4).overall());
}
