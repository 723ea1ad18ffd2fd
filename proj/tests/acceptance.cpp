// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include "phasekit/fock_rep.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/truncated.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

using namespace phasekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const PhaseFamily kFamilies[] = {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d, PhaseFamily::Ed};

int size_of(int k, PhaseFamily f, int l) {
  if (f == PhaseFamily::Ed) return (k + 1) * (k + 2) / 2;
  if (f == PhaseFamily::E3d) return l + 1;
  return k - l + 1;
}

PartitionKind partition_of(PhaseFamily f) {
  return f == PhaseFamily::E1d ? PartitionKind::A : f == PhaseFamily::E2d ? PartitionKind::B : PartitionKind::C;
}

void criterion1(std::mt19937_64& rng) {
  const auto t0 = Clock::now();
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  bool all = true;
  for (int k = 1; k <= 6; ++k) {
    for (int i = 0; i < 5; ++i) {
      const KappaSpec s = KappaSpec::negative(k, ang(rng));
      const VerificationReport r = check_algebra(s, build_space(s), 1e-10);
      for (const CheckEntry& e : r.entries()) worst = std::max(worst, e.split ? e.split->interior : e.max_residual);
      all = all && r.overall();
    }
  }
  const double t = seconds_since(t0);
  line(1, all && worst < 1e-10 && t < 10.0, "algebra suite", fmt("max interior residual %.3g, %.3f s", worst, t));
}

void criterion2() {
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) worst = std::max(worst, lie_closure_residual(KappaSpec::negative(k, 0.3)));
  for (double kappa : {0.5, 1.0}) worst = std::max(worst, lie_closure_residual(KappaSpec::non_negative(kappa, 6, 0.3)));
  line(2, worst < 1e-10, "Lie embedding closure", fmt("max span-projection residual %.3g", worst));
}

void criterion3(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  bool orbit = true;
  for (int k = 1; k <= 8; ++k) {
    for (int i = 0; i < 5; ++i) {
      const KappaSpec s = KappaSpec::negative(k, ang(rng));
      const SpacePtr sp = build_space(s);
      for (PhaseFamily f : kFamilies) worst = std::max(worst, unitarity_residual(build_phase_operator(s, sp, f).op.matrix));
      orbit = orbit && orbit_length(build_Ed(s, sp).op.matrix, 0) == sp->dim();
    }
  }
  line(3, worst < 1e-12 && orbit, "unitarity",
       fmt("max unitarity residual %.3g", worst) + ", E_d orbit covers all rays: " + (orbit ? "yes" : "no"));
}

void criterion4(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const KappaSpec s = KappaSpec::negative(k, ang(rng));
    const SpacePtr sp = build_space(s);
    worst = std::max(worst, max_abs(ladder(s, sp, Mode::One, Sign::Minus).matrix -
                                    build_E1d(s, sp).op.matrix * sqrt_structure(s, *sp, Mode::One)));
    worst = std::max(worst, max_abs(ladder(s, sp, Mode::Two, Sign::Minus).matrix -
                                    build_E2d(s, sp).op.matrix * sqrt_structure(s, *sp, Mode::Two)));
    worst = std::max(worst, max_abs(ladder3(s, sp, Sign::Minus).matrix - build_E3d(s, sp).op.matrix * sqrt_structure3(s, *sp)));
  }
  line(4, worst < 1e-12, "polar decompositions", fmt("max residual %.3g", worst));
}

void criterion5(std::mt19937_64& rng) {
  double eig = 0.0, equi = 0.0, clos = 0.0, ovl = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double phi = 0.37 * k - 1.1;
    const KappaSpec s = KappaSpec::negative(k, phi);
    const SpacePtr sp = build_space(s);
    const Index d = sp->dim();
    for (PhaseFamily f : kFamilies) {
      const Matrix e = build_phase_operator(s, sp, f).op.matrix;
      Matrix full = Matrix::Zero(d, d);
      const int lmax = f == PhaseFamily::Ed ? 0 : k;
      for (int l = 0; l <= lmax; ++l) {
        const int size = size_of(k, f, l);
        Matrix block = Matrix::Zero(d, d);
        const auto states = phase_states(s, sp, f, l, phi).states;
        for (int m = 0; m < size; ++m) {
          const Vector& v = states[static_cast<std::size_t>(m)].amps;
          eig = std::max(eig, max_abs(e * v - std::polar(1.0, kTwoPi * m / size) * v));
          for (Index j = 0; j < d; ++j)
            if (std::abs(v(j)) > 0.0) equi = std::max(equi, std::abs(std::abs(v(j)) - 1.0 / std::sqrt(double(size))));
          block += v * v.adjoint();
        }
        Matrix proj = Matrix::Zero(d, d);
        if (f == PhaseFamily::Ed) {
          proj = Matrix::Identity(d, d);
        } else {
          const Partition part = build_partition(s, sp, partition_of(f));
          for (Index j : part.blocks[static_cast<std::size_t>(l)]) proj(j, j) = 1.0;
        }
        clos = std::max(clos, max_abs(block - proj));
        full += block;
      }
      clos = std::max(clos, max_abs(full - Matrix::Identity(d, d)));
    }
  }
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + i % 6;
    const KappaSpec s = KappaSpec::negative(k);
    const SpacePtr sp = build_space(s);
    const PhaseFamily f = kFamilies[i % 4];
    std::uniform_int_distribution<int> li(0, k), mi(0, 40);
    const int l = f == PhaseFamily::Ed ? 0 : li(rng);
    const int l2 = f == PhaseFamily::Ed ? 0 : (i % 4 == 1 ? li(rng) : l);
    const int m = mi(rng), m2 = mi(rng);
    const double p = ang(rng), p2 = ang(rng);
    const Complex direct = phase_state(s, sp, f, l, m, p).amps.dot(phase_state(s, sp, f, l2, m2, p2).amps);
    ovl = std::max(ovl, std::abs(direct - overlap_formula(s, f, l, m, p, l2, m2, p2)));
  }
  const bool ok = eig < 1e-10 && equi < 1e-12 && clos < 1e-12 && ovl < 1e-10;
  line(5, ok, "phase-state suite",
       fmt("eigen %.3g, equiprobability %.3g, closure %.3g", eig, equi, clos) + fmt(", overlaps %.3g", ovl));
}

void criterion6(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const PhaseFamily f = kFamilies[rng() % 4];
    const int l = f == PhaseFamily::Ed ? 0 : static_cast<int>(rng() % static_cast<unsigned>(k + 1));
    const int m = static_cast<int>(rng() % 50);
    const double phi = ang(rng), t = ang(rng);
    const KappaSpec s = KappaSpec::negative(k, phi);
    const SpacePtr sp = build_space(s);
    const StateVector st = phase_state(s, sp, f, l, m, phi);
    worst = std::max(worst, (evolve(s, st, t).amps - phase_state(s, sp, f, l, m, phi + t).amps).norm());
  }
  line(6, worst < 1e-12, "temporal stability", fmt("max norm difference %.3g over 20 draws", worst));
}

void criterion7() {
  double worst = 0.0;
  for (double phi : {0.0, 0.3, kPi / 2}) {
    const Complex p = std::polar(1.0, phi), pm = std::polar(1.0, -phi);
    Matrix e13 = Matrix::Zero(3, 3), e23 = Matrix::Zero(3, 3), e33 = Matrix::Zero(3, 3), e3 = Matrix::Zero(3, 3);
    e13(0, 1) = p, e13(1, 0) = pm, e13(2, 2) = 1.0;
    e23(0, 2) = p, e23(2, 0) = pm, e23(1, 1) = 1.0;
    e33(1, 2) = 1.0, e33(2, 1) = 1.0, e33(0, 0) = 1.0;
    e3(0, 1) = p, e3(1, 2) = 1.0, e3(2, 0) = pm;
    const KappaSpec s = KappaSpec::negative(1, phi);
    const SpacePtr sp = build_space(s);
    worst = std::max({worst, max_abs(build_E1d(s, sp).op.matrix - e13), max_abs(build_E2d(s, sp).op.matrix - e23),
                      max_abs(build_E3d(s, sp).op.matrix - e33), max_abs(build_Ed(s, sp).op.matrix - e3)});
  }
  line(7, worst <= 1e-15, "qutrit golden matrices", fmt("max elementwise difference %.3g", worst));
}

void criterion8() {
  double comm = 0.0, defect = 0.0, e3 = 0.0;
  bool all = true;
  for (double kappa : {0.0, 0.5, 1.0}) {
    for (int sigma = 2; sigma <= 6; ++sigma) {
      const KappaSpec s = KappaSpec::non_negative(kappa, sigma, 0.4);
      const Window w = make_window(s);
      const VerificationReport r = check_truncated_algebra(s, w, 1e-12);
      all = all && r.overall();
      for (const CheckEntry& e : r.entries()) {
        if (e.name.rfind("[b1-,b1+]", 0) == 0 || e.name.rfind("[b2-,b2+]", 0) == 0) comm = std::max(comm, e.max_residual);
        if (e.name.find("boundary defect") != std::string::npos) defect = std::max(defect, e.max_residual);
      }
      const VerificationReport ei = check_Einf(s, w, 1e-12);
      all = all && ei.overall();
      for (const CheckEntry& e : ei.entries()) {
        if (e.name.find("E3inf = E1inf^dagger E2inf") != std::string::npos)
          e3 = std::max(e3, e.split ? e.split->interior : e.max_residual);
        else if (e.name.find("dagger") != std::string::npos || e.name.find("defect") != std::string::npos)
          defect = std::max(defect, e.max_residual);
      }
    }
  }
  line(8, all && comm < 1e-12 && defect < 1e-12 && e3 < 1e-12, "truncated suite",
       fmt("modified commutators %.3g, windowed defect identities %.3g, E3=E1^dagger E2 %.3g", comm, defect, e3));
}

void criterion9() {
  const KappaSpec s = KappaSpec::non_negative(0.5, 3, 0.3);
  const Window w = make_window(s);
  const Index d = w.space->dim();
  const double g7 = max_abs(quadrature_average(s, w, 0.3, 7) - Matrix::Identity(d, d));
  const double g3 = max_abs(quadrature_average(s, w, 0.3, 3) - Matrix::Identity(d, d));
  line(9, g7 < 1e-12 && g3 > 1e-3, "quadrature closure", fmt("G=7 deviation %.3g, G=3 aliasing %.3g", g7, g3));
}

void criterion10() {
  const auto t0 = Clock::now();
  double dev = 0.0, gauss = 0.0, routes = 0.0;
  bool counts = true;
  for (int N : {2, 3, 5, 7, 11, 13}) {
    const MubSet set = build_mub_set(N);
    counts = counts && static_cast<int>(set.bases.size()) == N + 1 && set.is_complete();
    for (std::size_t i = 0; i < set.bases.size(); ++i)
      for (std::size_t j = i + 1; j < set.bases.size(); ++j) {
        const Matrix g = set.bases[i].vectors.adjoint() * set.bases[j].vectors;
        dev = std::max(dev, (g.cwiseAbs().array() - 1.0 / std::sqrt(double(N))).abs().maxCoeff());
      }
    for (int a = 0; a < N; ++a)
      for (int al = 0; al < N; ++al) {
        const Vector v = mub_vector(N, a, al);
        routes = std::max({routes, max_abs(mub_vector_e1route(N, a, al) - v), max_abs(mub_vector_e3route(N, a, al) - v)});
        for (int b = 0; b < N; ++b)
          for (int be = 0; be < N; ++be)
            gauss = std::max(gauss, std::abs(v.dot(mub_vector(N, b, be)) - mub_overlap_formula(N, a, al, b, be)));
      }
  }
  const MubSet four = build_mub_set(4);
  const bool control = !four.is_complete() && !four.certificate.failing_pairs.empty();
  const double t = seconds_since(t0);
  const bool ok = counts && dev < 1e-10 && gauss < 1e-12 && routes < 1e-12 && control && t < 60.0;
  line(10, ok, "MUB suite",
       fmt("max deviation %.3g, Gauss-sum formula %.3g, route mismatch %.3g", dev, gauss, routes) +
           ", N=4 flagged pairs " + std::to_string(four.certificate.failing_pairs.size()) + fmt(", %.3f s", t));
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261016);
  const auto t0 = Clock::now();
  criterion1(rng);
  criterion2();
  criterion3(rng);
  criterion4(rng);
  criterion5(rng);
  criterion6(rng);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria passed in %.3f s\n", 10 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
