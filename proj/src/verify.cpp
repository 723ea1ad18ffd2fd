// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/verify.hpp"

#include "phasekit/fock_rep.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/truncated.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace phasekit {

namespace {

std::string kappa_tag(double kappa, int sigma) {
  std::ostringstream os;
  os << "kappa=" << kappa << ",sigma=" << sigma << " ";
  return os.str();
}

}  // namespace

VerificationReport verify_all(const VerifyConfig& config) {
  VerificationReport report;
  const double tol = config.tolerance;
  const KappaSpec spec = KappaSpec::negative(config.k, config.phi);
  const SpacePtr space = build_space(spec);
  const int k = config.k;

  report.append(check_algebra(spec, space, tol), "fock-rep: ");
  report.append(check_representation(spec, space, tol), "fock-rep: ");
  if (k > 0) report.add("fock-rep: Lie closure (kappa<0)", lie_closure_residual(spec), tol);

  report.append(check_phase_operators(spec, space, tol), "phase-operators: ");
  report.append(check_polar(spec, space, tol), "phase-operators: ");

  report.append(check_phase_states(spec, space, tol), "phase-states: ");
  report.append(check_qutrit(config.phi, tol), "phase-states: ");

  // Randomized overlap sums and temporal stability.
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<int> pick_l(0, k);
  std::uniform_int_distribution<int> pick_m(0, 1 << 20);
  const PhaseFamily families[] = {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d, PhaseFamily::Ed};
  double overlap = 0.0;
  double stability = 0.0;
  for (int i = 0; i < config.draws; ++i) {
    const PhaseFamily fam = families[static_cast<std::size_t>(i) % 4];
    const int l = fam == PhaseFamily::Ed ? 0 : pick_l(rng);
    const int l2 = fam == PhaseFamily::Ed ? 0 : (i % 3 == 0 ? pick_l(rng) : l);
    const int m = pick_m(rng);
    const int m2 = pick_m(rng);
    const double p1 = angle(rng);
    const double p2 = angle(rng);
    const double t = angle(rng);
    const Vector a = phase_state(spec, space, fam, l, m, p1).amps;
    const Vector b = phase_state(spec, space, fam, l2, m2, p2).amps;
    overlap = std::max(overlap, std::abs(a.dot(b) - overlap_formula(spec, fam, l, m, p1, l2, m2, p2)));
    const StateVector s = phase_state(spec, space, fam, l, m, p1);
    stability = std::max(stability, max_abs(evolve(spec, s, t).amps - phase_state(spec, space, fam, l, m, p1 + t).amps));
  }
  report.add("phase-states: random overlap draws", overlap, tol);
  report.add("phase-states: random temporal-stability draws", stability, tol);

  for (double kappa : config.window_kappas) {
    const KappaSpec ws = KappaSpec::non_negative(kappa, config.sigma, config.phi);
    const Window w = make_window(ws);
    const std::string tag = "truncated: " + kappa_tag(kappa, config.sigma);
    report.append(check_truncated_algebra(ws, w, tol), tag);
    report.append(check_Einf(ws, w, tol), tag);

    const ThetaState th = theta_state(ws, w, angle(rng), angle(rng), config.phi);
    const ThetaResiduals r = theta_residuals(ws, w, th);
    report.add(tag + "theta state E1inf relation off the shell", r.e1.interior, tol);
    report.add(tag + "theta state E2inf relation off the shell", r.e2.interior, tol);
    report.add(tag + "theta state E3inf relation for n1 >= 1", r.e3.interior, tol);
    const double t = angle(rng);
    const ThetaState later = theta_state(ws, w, th.theta1, th.theta2, config.phi + t);
    report.add(tag + "theta state temporal stability", max_abs(evolve(ws, th.state, t).amps - later.state.amps), tol);
    report.append(quadrature_closure(ws, w, config.phi, 2 * config.sigma + 1, tol), tag);
    if (kappa != 0.0) report.add(tag + "Lie closure (kappa>0)", lie_closure_residual(ws), tol);
  }

  report.append(check_mub(config.mub_N, tol), "mub-gen: ");
  return report;
}

}  // namespace phasekit
