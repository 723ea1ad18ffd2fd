// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/cli.hpp"

#include "phasekit/fock_rep.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/serialize.hpp"
#include "phasekit/truncated.hpp"
#include "phasekit/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace phasekit::cli {

namespace {

constexpr int kDefaultSigma = 8;

struct Options {
  std::optional<int> k;
  std::optional<double> kappa;
  std::optional<int> sigma;
  double phi = 0.0;
  std::optional<double> tolerance;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";

  std::string export_path;
  std::string family = "all";
  int l = 0;
  long long m = 0;
  bool vector = false;
  double t = 0.0;
  int grid = 0;
  int N = 5;
  std::string route = "e1";
  bool verify = false;
  int draws = 20;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double resolve_tolerance(const Options& o) {
  double tol = kDefaultTolerance;
  if (o.tolerance) {
    tol = *o.tolerance;
  } else if (const char* env = std::getenv("PHASEKIT_TOLERANCE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (end == env || *end != '\0') throw UsageError(std::string("PHASEKIT_TOLERANCE is not a number: ") + env);
  }
  if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
  return tol;
}

/// --k wins; otherwise --kappa (with --sigma for kappa >= 0); otherwise the
/// command's default regime.
KappaSpec resolve_spec(const Options& o, bool prefer_window) {
  if (o.k && o.kappa) throw UsageError("--k and --kappa are mutually exclusive");
  if (o.k) return KappaSpec::negative(*o.k, o.phi);
  if (o.kappa) return KappaSpec::from_kappa(*o.kappa, o.sigma.value_or(kDefaultSigma), o.phi);
  if (prefer_window) return KappaSpec::non_negative(0.0, o.sigma.value_or(kDefaultSigma), o.phi);
  return KappaSpec::negative(3, o.phi);
}

Json spec_json(const KappaSpec& s) {
  Json j = {{"kappa", s.kappa()}, {"regime", to_string(s.regime())}, {"phi", s.phi()}, {"shell", s.shell()}};
  if (s.is_negative()) j["k"] = s.k();
  if (s.sigma()) j["sigma"] = *s.sigma();
  return j;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
}

int emit(const Options& o, std::ostream& out, const Json& j, bool ok) {
  out << j.dump(2) << '\n';
  if (!o.out_path.empty()) write_file(o.out_path, j);
  return ok ? kExitOk : kExitCheckFailed;
}

Json report_json(const VerificationReport& r, const std::string& command, const Options& o, double tol) {
  Json j = to_json(r);
  j["command"] = command;
  j["tolerance"] = tol;
  j["seed"] = o.seed;
  return j;
}

std::vector<PhaseFamily> families_for(const std::string& name, bool allow_ed) {
  if (name == "all") {
    std::vector<PhaseFamily> out = {PhaseFamily::E1d, PhaseFamily::E2d, PhaseFamily::E3d};
    if (allow_ed) out.push_back(PhaseFamily::Ed);
    return out;
  }
  return {phase_family_from_string(name)};
}

int cmd_rep_build(const Options& o, std::ostream& out) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  Json ops = Json::array();
  for (Mode i : {Mode::One, Mode::Two}) {
    ops.push_back(to_json(ladder(spec, space, i, Sign::Plus)));
    ops.push_back(to_json(ladder(spec, space, i, Sign::Minus)));
  }
  ops.push_back(to_json(number_operator(space, Mode::One)));
  ops.push_back(to_json(number_operator(space, Mode::Two)));
  if (!o.export_path.empty()) write_file(o.export_path, {{"spec", spec_json(spec)}, {"operators", ops}});
  Json basis = Json::array();
  for (const BasisState& s : space->states()) basis.push_back({s.n1, s.n2});
  return emit(o, out, {{"spec", spec_json(spec)}, {"dim", space->dim()}, {"basis", basis}, {"operators", ops.size()}},
              true);
}

int cmd_rep_check(const Options& o, std::ostream& out, double tol) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  VerificationReport r = check_algebra(spec, space, tol);
  r.append(check_representation(spec, space, tol));
  if (spec.regime() != Regime::Zero && !(spec.is_negative() && spec.k() == 0)) {
    r.add("Lie closure", lie_closure_residual(spec), tol);
  }
  Json j = report_json(r, "rep check", o, tol);
  j["spec"] = spec_json(spec);
  return emit(o, out, j, r.overall());
}

int cmd_phase_ops(const Options& o, std::ostream& out, double tol) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  Json ops = Json::array();
  for (PhaseFamily f : families_for(o.family, true)) ops.push_back(to_json(build_phase_operator(spec, space, f)));
  if (!o.export_path.empty()) write_file(o.export_path, {{"spec", spec_json(spec)}, {"phase_operators", ops}});
  VerificationReport r = check_phase_operators(spec, space, tol);
  r.append(check_polar(spec, space, tol));
  Json j = report_json(r, "phase-ops", o, tol);
  j["spec"] = spec_json(spec);
  j["phase_operators"] = std::move(ops);
  return emit(o, out, j, r.overall());
}

int cmd_phase_states(const Options& o, std::ostream& out, double tol) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  const PhaseFamily fam = phase_family_from_string(o.family == "all" ? "E1d" : o.family);
  Json j = {{"spec", spec_json(spec)}};
  if (o.vector) {
    Json arr = Json::array();
    for (const VectorPhaseState& v : vector_phase_states(spec, space, fam, o.m, o.phi)) arr.push_back(to_json(v));
    j["vector_phase_states"] = std::move(arr);
  } else {
    j["phase_states"] = to_json(phase_states(spec, space, fam, o.l, o.phi));
  }
  const VerificationReport r = check_phase_states(spec, space, tol);
  j["report"] = report_json(r, "phase-states", o, tol);
  return emit(o, out, j, r.overall());
}

int cmd_evolve(const Options& o, std::ostream& out, double tol) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  const PhaseFamily fam = phase_family_from_string(o.family == "all" ? "Ed" : o.family);
  const StateVector before = phase_state(spec, space, fam, o.l, o.m, o.phi);
  const StateVector after = evolve(spec, before, o.t);
  const StateVector target = phase_state(spec, space, fam, o.l, o.m, o.phi + o.t);
  VerificationReport r;
  r.add("temporal stability", max_abs(after.amps - target.amps), tol);
  r.add("norm preserved", std::abs(after.norm() - before.norm()), tol);
  Json j = report_json(r, "evolve", o, tol);
  j["spec"] = spec_json(spec);
  j["t"] = o.t;
  j["initial"] = to_json(before);
  j["evolved"] = to_json(after);
  return emit(o, out, j, r.overall());
}

int cmd_truncated(const Options& o, std::ostream& out, double tol) {
  if (o.k) throw UsageError("truncated requires --kappa >= 0, not --k");
  const KappaSpec spec = resolve_spec(o, true);
  if (spec.is_negative()) throw UsageError("truncated requires kappa >= 0");
  const Window w = make_window(spec);
  VerificationReport r = check_truncated_algebra(spec, w, tol);
  r.append(check_Einf(spec, w, tol));
  r.append(quadrature_closure(spec, w, o.phi, o.grid > 0 ? o.grid : 2 * w.sigma + 1, tol));
  Json j = report_json(r, "truncated", o, tol);
  j["spec"] = spec_json(spec);
  return emit(o, out, j, r.overall());
}

int cmd_mub_generate(const Options& o, std::ostream& out, double tol) {
  if (o.N < 2) throw UsageError("--N must be at least 2");
  const MubSet set = build_mub_set(o.N, mub_route_from_string(o.route), tol);
  Json j = to_json(set);
  bool ok = true;
  if (o.verify) {
    const VerificationReport r = check_mub(o.N, tol);
    j["report"] = report_json(r, "mub generate", o, tol);
    ok = r.overall() && set.is_complete(tol);
  }
  return emit(o, out, j, ok);
}

int cmd_verify_all(const Options& o, std::ostream& out, double tol) {
  VerifyConfig cfg;
  if (o.kappa) throw UsageError("verify-all takes --k (kappa = -1/k), not --kappa");
  cfg.k = o.k.value_or(3);
  if (cfg.k < 1) throw UsageError("verify-all needs k >= 1");
  cfg.phi = o.phi;
  cfg.sigma = o.sigma.value_or(4);
  cfg.mub_N = o.N;
  cfg.tolerance = tol;
  cfg.seed = o.seed;
  cfg.draws = o.draws;
  const VerificationReport r = verify_all(cfg);
  Json j = report_json(r, "verify-all", o, tol);
  j["config"] = {{"k", cfg.k}, {"phi", cfg.phi}, {"sigma", cfg.sigma}, {"N", cfg.mub_N}, {"draws", cfg.draws}};
  return emit(o, out, j, r.overall());
}

int cmd_export(const Options& o, std::ostream& out) {
  const KappaSpec spec = resolve_spec(o, false);
  const SpacePtr space = build_space(spec);
  Json ops = Json::array();
  for (Mode i : {Mode::One, Mode::Two}) {
    for (Sign s : {Sign::Plus, Sign::Minus}) ops.push_back(to_json(ladder(spec, space, i, s)));
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) ops.push_back(to_json(ladder3(spec, space, s)));
  ops.push_back(to_json(number_operator(space, Mode::One)));
  ops.push_back(to_json(number_operator(space, Mode::Two)));
  ops.push_back(to_json(hamiltonian(spec, space)));
  Json j = {{"spec", spec_json(spec)}, {"operators", std::move(ops)}};
  if (spec.is_negative()) {
    Json phase = Json::array();
    for (PhaseFamily f : families_for("all", true)) phase.push_back(to_json(build_phase_operator(spec, space, f)));
    j["phase_operators"] = std::move(phase);
  }
  return emit(o, out, j, true);
}

void add_common(CLI::App& app, Options& o) {
  app.add_option("--k", o.k, "kappa = -1/k (positive integer)");
  app.add_option("--kappa", o.kappa, "deformation parameter; negative values must equal -1/k");
  app.add_option("--sigma", o.sigma, "window size for kappa >= 0");
  app.add_option("--phi", o.phi, "representation phase parameter (radians)");
  app.add_option("--tolerance", o.tolerance, "max-abs residual threshold (default 1e-10, env PHASEKIT_TOLERANCE)");
  app.add_option("--seed", o.seed, "seed for randomized draws");
  app.add_option("--out", o.out_path, "also write the JSON result to this file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Matrix realizations of a generalized oscillator algebra, its phase operators and phase states", "phasekit"};
  app.fallthrough();
  app.require_subcommand(1);
  add_common(app, o);

  auto* rep = app.add_subcommand("rep", "Fock representation");
  rep->require_subcommand(1);
  auto* rep_build = rep->add_subcommand("build", "build the ladder and number operators");
  rep_build->add_option("--export", o.export_path, "write the six operators to this JSON file");
  auto* rep_check = rep->add_subcommand("check", "check the defining relations");

  auto* phase_ops = app.add_subcommand("phase-ops", "phase operators and polar decompositions");
  phase_ops->add_option("--family", o.family, "E1d, E2d, E3d, Ed or all");
  phase_ops->add_option("--export", o.export_path, "write the phase operators to this JSON file");

  auto* states = app.add_subcommand("phase-states", "phase states of one block");
  states->add_option("--family", o.family, "E1d, E2d, E3d or Ed");
  states->add_option("--l", o.l, "block index");
  states->add_option("--m", o.m, "label for vector phase states");
  states->add_flag("--vector", o.vector, "emit the vector phase states for label m");

  auto* ev = app.add_subcommand("evolve", "time evolution of a phase state");
  ev->add_option("--family", o.family, "E1d, E2d, E3d or Ed");
  ev->add_option("--l", o.l, "block index");
  ev->add_option("--m", o.m, "eigenvalue label");
  ev->add_option("--t", o.t, "evolution time");

  auto* trunc = app.add_subcommand("truncated", "kappa >= 0 truncated algebra on a window");
  trunc->add_option("--grid", o.grid, "quadrature grid size (default 2 sigma + 1)");

  auto* mub = app.add_subcommand("mub", "mutually unbiased bases");
  mub->require_subcommand(1);
  auto* mub_gen = mub->add_subcommand("generate", "generate B_N and B_0a, a = 0..N-1");
  mub_gen->add_option("--N", o.N, "dimension")->required();
  mub_gen->add_option("--route", o.route, "e1 or e3")->check(CLI::IsMember({"e1", "e3"}));
  mub_gen->add_flag("--verify", o.verify, "certify and exit nonzero unless the set is complete");

  auto* all = app.add_subcommand("verify-all", "run every check");
  all->add_option("--N", o.N, "MUB dimension");
  all->add_option("--draws", o.draws, "randomized draws");

  auto* exp = app.add_subcommand("export", "export all operators as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "phasekit: " << e.what() << "\n" << "run 'phasekit --help' for usage\n";
    return kExitUsage;
  }

  try {
    const double tol = resolve_tolerance(o);
    if (rep_build->parsed()) return cmd_rep_build(o, out);
    if (rep_check->parsed()) return cmd_rep_check(o, out, tol);
    if (phase_ops->parsed()) return cmd_phase_ops(o, out, tol);
    if (states->parsed()) return cmd_phase_states(o, out, tol);
    if (ev->parsed()) return cmd_evolve(o, out, tol);
    if (trunc->parsed()) return cmd_truncated(o, out, tol);
    if (mub_gen->parsed()) return cmd_mub_generate(o, out, tol);
    if (all->parsed()) return cmd_verify_all(o, out, tol);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "phasekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "phasekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "phasekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "phasekit: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  err << "phasekit: no command given\n";
  return kExitUsage;
}

}  // namespace phasekit::cli
