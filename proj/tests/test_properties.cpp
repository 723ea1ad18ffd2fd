// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

// Randomized invariants. Every generator is seeded so failures reproduce.

#include "phasekit/fock_rep.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/serialize.hpp"
#include "phasekit/truncated.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace phasekit;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return real(-kPi, kPi); }
  PhaseFamily family() { return static_cast<PhaseFamily>(integer(0, 3)); }
  Vector state(Index d) {
    Vector v(d);
    for (Index j = 0; j < d; ++j) v(j) = Complex(real(-1, 1), real(-1, 1));
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kCases = 40;

}  // namespace

TEST(Property, StructureFunctionsNonNegativeInsideShell) {
  Gen g(11);
  for (int c = 0; c < kCases; ++c) {
    const KappaSpec s = KappaSpec::negative(g.integer(1, 12));
    const int n1 = g.integer(0, s.k());
    const int n2 = g.integer(0, s.k() - n1);
    EXPECT_GE(structure_function(s, Mode::One, n1, n2), 0.0);
    EXPECT_GE(structure_function(s, Mode::Two, n1, n2), 0.0);
  }
}

TEST(Property, LadderAdjointPairingAndAlgebra) {
  Gen g(12);
  for (int c = 0; c < kCases; ++c) {
    const KappaSpec s = KappaSpec::negative(g.integer(1, 7), g.angle());
    const SpacePtr sp = build_space(s);
    for (Mode i : {Mode::One, Mode::Two})
      EXPECT_LT(max_abs(ladder(s, sp, i, Sign::Minus).matrix.adjoint() - ladder(s, sp, i, Sign::Plus).matrix), 1e-12);
    EXPECT_TRUE(check_algebra(s, sp, 1e-10).overall());
  }
}

TEST(Property, PhaseOperatorsUnitaryWithRootOfUnitySpectrum) {
  Gen g(13);
  for (int c = 0; c < kCases; ++c) {
    const KappaSpec s = KappaSpec::negative(g.integer(1, 8), g.angle());
    const SpacePtr sp = build_space(s);
    const PhaseFamily f = g.family();
    const Matrix e = build_phase_operator(s, sp, f).op.matrix;
    EXPECT_LT(unitarity_residual(e), 1e-12) << to_string(f);
  }
}

TEST(Property, PropagatorCommutesWithHamiltonian) {
  Gen g(14);
  for (int c = 0; c < kCases; ++c) {
    const KappaSpec s = KappaSpec::negative(g.integer(1, 6), g.angle());
    const SpacePtr sp = build_space(s);
    const Matrix u = propagator(s, *sp, g.angle());
    EXPECT_LT(unitarity_residual(u), 1e-12);
    EXPECT_LT(max_abs(commutator(u, hamiltonian(s, sp).matrix)), 1e-12);
  }
}

TEST(Property, TemporalStability) {
  Gen g(15);
  for (int c = 0; c < kCases; ++c) {
    const int k = g.integer(1, 6);
    const double phi = g.angle();
    const double t = g.angle();
    const KappaSpec s = KappaSpec::negative(k, phi);
    const SpacePtr sp = build_space(s);
    const PhaseFamily f = g.family();
    const int l = f == PhaseFamily::Ed ? 0 : g.integer(0, k);
    const int m = g.integer(-20, 20);
    const StateVector st = phase_state(s, sp, f, l, m, phi);
    EXPECT_LT(max_abs(evolve(s, st, t).amps - phase_state(s, sp, f, l, m, phi + t).amps), 1e-12);
    const Vector x = g.state(sp->dim());
    EXPECT_NEAR(evolve(s, StateVector(x, sp, "x"), t).amps.norm(), x.norm(), 1e-12);
  }
}

TEST(Property, OverlapFormulaMatchesInnerProduct) {
  Gen g(16);
  for (int c = 0; c < 100; ++c) {
    const int k = g.integer(1, 6);
    const KappaSpec s = KappaSpec::negative(k);
    const SpacePtr sp = build_space(s);
    const PhaseFamily f = g.family();
    const int l = f == PhaseFamily::Ed ? 0 : g.integer(0, k);
    const int l2 = f == PhaseFamily::Ed ? 0 : (g.integer(0, 3) == 0 ? g.integer(0, k) : l);
    const int m = g.integer(0, 30), m2 = g.integer(0, 30);
    const double p = g.angle(), p2 = g.angle();
    const Complex direct = phase_state(s, sp, f, l, m, p).amps.dot(phase_state(s, sp, f, l2, m2, p2).amps);
    EXPECT_LT(std::abs(direct - overlap_formula(s, f, l, m, p, l2, m2, p2)), 1e-10);
  }
}

TEST(Property, TruncatedReportsAcrossRandomKappa) {
  Gen g(17);
  for (int c = 0; c < 12; ++c) {
    const KappaSpec s = KappaSpec::non_negative(g.real(0.0, 2.0), g.integer(2, 6), g.angle());
    const Window w = make_window(s);
    EXPECT_TRUE(check_truncated_algebra(s, w, 1e-10).overall()) << s.kappa() << " " << *s.sigma();
    EXPECT_TRUE(check_Einf(s, w, 1e-10).overall());
    const ThetaState th = theta_state(s, w, g.angle(), g.angle(), g.angle());
    const ThetaResiduals r = theta_residuals(s, w, th);
    EXPECT_LT(std::max({r.e1.interior, r.e2.interior, r.e3.interior}), 1e-12);
  }
}

TEST(Property, MubOverlapsFromGaussSum) {
  Gen g(18);
  const int primes[] = {2, 3, 5, 7, 11, 13};
  for (int c = 0; c < 200; ++c) {
    const int N = primes[g.integer(0, 5)];
    const int a = g.integer(0, N - 1), b = g.integer(0, N - 1);
    const int al = g.integer(0, N - 1), be = g.integer(0, N - 1);
    const Complex direct = mub_vector(N, a, al).dot(mub_vector(N, b, be));
    EXPECT_LT(std::abs(direct - mub_overlap_formula(N, a, al, b, be)), 1e-12);
    if (a != b) EXPECT_NEAR(std::abs(direct), 1.0 / std::sqrt(double(N)), 1e-10);
  }
}

TEST(Property, OperatorJsonRoundTrip) {
  Gen g(19);
  for (int c = 0; c < 10; ++c) {
    const SpacePtr sp = make_space(g.integer(0, 5));
    Matrix m(sp->dim(), sp->dim());
    for (Index j = 0; j < m.cols(); ++j) m.col(j) = g.state(sp->dim());
    const LinearOperator op(m, sp, "random");
    EXPECT_EQ(max_abs(linear_operator_from_json(parse_json(to_json(op).dump())).matrix - m), 0.0);
  }
}
