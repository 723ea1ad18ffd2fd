// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/mub.hpp"

#include "phasekit/fock_rep.hpp"
#include "phasekit/kappa.hpp"
#include "phasekit/phase_states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasekit {

namespace {

void require_labels(int N, int a, int alpha) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (a < 0 || a >= N) throw std::out_of_range("a = " + std::to_string(a) + " outside 0..N-1");
  if (alpha < 0 || alpha >= N) throw std::out_of_range("alpha = " + std::to_string(alpha) + " outside 0..N-1");
}

long long mod(long long x, long long m) {
  const long long r = x % m;
  return r < 0 ? r + m : r;
}

/// e^{i pi e / w} for integer e, reduced modulo 2|w| first.
Complex half_turn_power(long long e, long long w) {
  const long long period = 2 * (w < 0 ? -w : w);
  const long long r = mod(w < 0 ? -e : e, period);
  return std::polar(1.0, kPi * static_cast<double>(r) / static_cast<double>(period / 2));
}

}  // namespace

double quantized_phase(int N, int a) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (a < 0 || a >= N) throw std::out_of_range("a = " + std::to_string(a) + " outside 0..N-1");
  return -kPi * (N - 1) * a / static_cast<double>(N);
}

Vector mub_vector(int N, int a, int alpha) {
  require_labels(N, a, alpha);
  Vector v(N);
  const double norm = 1.0 / std::sqrt(static_cast<double>(N));
  for (int n = 0; n < N; ++n) {
    // q0^{e/2} = e^{i pi e / N} with e = n(N-n)a + 2 n alpha.
    const long long e = static_cast<long long>(n) * (N - n) * a + 2LL * n * alpha;
    v(N - 1 - n) = norm * half_turn_power(e, N);
  }
  return v;
}

Vector mub_vector_e1route(int N, int a, int alpha) {
  require_labels(N, a, alpha);
  const KappaSpec spec = KappaSpec::negative(N - 1);
  const SpacePtr space = build_space(spec);
  const StateVector s = phase_state(spec, space, PhaseFamily::E1d, 0, alpha, quantized_phase(N, a));
  Vector v(N);
  for (int n = 0; n < N; ++n) v(N - 1 - n) = s.amplitude(n, 0);
  return v;
}

Vector mub_vector_e3route(int N, int a, int alpha) {
  require_labels(N, a, alpha);
  const int k = N - 1;
  const KappaSpec spec = KappaSpec::negative(k);
  const SpacePtr space = build_space(spec);
  const StateVector s = phase_state(spec, space, PhaseFamily::E3d, k, alpha, 0.0);
  const double phi = -kPi * static_cast<double>(k) * k * a / N;
  Vector v(N);
  for (int n = 0; n < N; ++n) {
    // F3(N1, N2) = kappa^2 (N1 + 1) N2 on |l-n, n>.
    const double f3 = k == 0 ? 0.0 : static_cast<double>(k - n + 1) * n / (static_cast<double>(k) * k);
    v(N - 1 - n) = std::polar(1.0, -f3 * phi) * s.amplitude(k - n, n);
  }
  return v;
}

Complex gauss_sum(const GaussSumSpec& spec) {
  if (spec.w == 0) throw std::invalid_argument("gauss_sum: w must be nonzero");
  const long long w_abs = spec.w < 0 ? -spec.w : spec.w;
  const long long period = 2 * w_abs;
  const long long u = mod(spec.u, period);
  const long long v = mod(spec.v, period);
  Complex sum = 0.0;
  for (long long j = 0; j < w_abs; ++j) {
    const long long jj = mod(j * j, period);
    sum += half_turn_power(mod(u * jj + v * j, period), spec.w);
  }
  return sum;
}

Complex mub_overlap_formula(int N, int a, int alpha, int b, int beta) {
  require_labels(N, a, alpha);
  require_labels(N, b, beta);
  const long long u = a - b;
  return gauss_sum({u, -u * N - 2LL * (alpha - beta), N}) / static_cast<double>(N);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::string to_string(MubRoute route) { return route == MubRoute::E1 ? "e1" : "e3"; }

MubRoute mub_route_from_string(const std::string& name) {
  if (name == "e1" || name == "E1") return MubRoute::E1;
  if (name == "e3" || name == "E3") return MubRoute::E3;
  throw std::invalid_argument("unknown MUB route '" + name + "' (expected e1 or e3)");
}

bool MubSet::is_complete(double tolerance) const {
  return certificate.prime && certificate.failing_pairs.empty() && certificate.max_deviation <= tolerance &&
         certificate.max_orthonormality <= tolerance && static_cast<int>(bases.size()) == N + 1;
}

MubSet build_mub_set(int N, MubRoute route, double tolerance) {
  if (N < 2) throw std::invalid_argument("build_mub_set: N must be at least 2");
  MubSet set;
  set.N = N;
  set.route = route;
  set.bases.push_back({"B_N", Matrix::Identity(N, N)});
  for (int a = 0; a < N; ++a) {
    Matrix m(N, N);
    for (int alpha = 0; alpha < N; ++alpha) {
      m.col(alpha) = route == MubRoute::E1 ? mub_vector(N, a, alpha) : mub_vector_e3route(N, a, alpha);
    }
    set.bases.push_back({"B_0" + std::to_string(a), std::move(m)});
  }

  const auto nb = static_cast<Index>(set.bases.size());
  const double target = 1.0 / std::sqrt(static_cast<double>(N));
  set.overlap_table = RealMatrix::Zero(nb, nb);
  MubCertificate& cert = set.certificate;
  cert.prime = is_prime(N);
  for (Index i = 0; i < nb; ++i) {
    const Matrix& bi = set.bases[static_cast<std::size_t>(i)].vectors;
    const double ortho = max_abs(bi.adjoint() * bi - Matrix::Identity(N, N));
    set.overlap_table(i, i) = ortho;
    cert.max_orthonormality = std::max(cert.max_orthonormality, ortho);
    for (Index j = i + 1; j < nb; ++j) {
      const Matrix g = bi.adjoint() * set.bases[static_cast<std::size_t>(j)].vectors;
      const double dev = (g.cwiseAbs().array() - target).abs().maxCoeff();
      set.overlap_table(i, j) = set.overlap_table(j, i) = dev;
      cert.max_deviation = std::max(cert.max_deviation, dev);
      ++cert.pairs_checked;
      if (!(dev <= tolerance)) cert.failing_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return set;
}

VerificationReport check_mub(int N, double tolerance) {
  VerificationReport report;
  const std::string tag = "N=" + std::to_string(N) + " ";
  const MubSet e1 = build_mub_set(N, MubRoute::E1, tolerance);

  double formula = 0.0;
  double routes = 0.0;
  double from_states = 0.0;
  for (int a = 0; a < N; ++a) {
    for (int alpha = 0; alpha < N; ++alpha) {
      const Vector u = mub_vector(N, a, alpha);
      routes = std::max(routes, max_abs(u - mub_vector_e3route(N, a, alpha)));
      from_states = std::max(from_states, max_abs(u - mub_vector_e1route(N, a, alpha)));
      for (int b = 0; b < N; ++b) {
        for (int beta = 0; beta < N; ++beta) {
          const Complex direct = u.dot(mub_vector(N, b, beta));
          formula = std::max(formula, std::abs(direct - mub_overlap_formula(N, a, alpha, b, beta)));
        }
      }
    }
  }
  report.add(tag + "overlap = S(u,v,N)/N", formula, tolerance);
  report.add(tag + "E1 and E3 routes agree", routes, tolerance);
  report.add(tag + "closed form = E1d(0) phase state at quantized phi", from_states, tolerance);

  double unitary = 0.0;
  for (std::size_t i = 1; i < e1.bases.size(); ++i) unitary = std::max(unitary, unitarity_residual(e1.bases[i].vectors));
  report.add(tag + "B_0a change-of-basis matrices unitary", unitary, tolerance);

  double computational = 0.0;
  for (Index j = 1; j < e1.overlap_table.cols(); ++j) computational = std::max(computational, e1.overlap_table(0, j));
  report.add(tag + "|<n|a alpha>| = 1/sqrt(N)", computational, tolerance);

  if (e1.certificate.prime) {
    report.add(tag + "mutually unbiased", e1.certificate.max_deviation, tolerance);
  } else {
    report.add(tag + "composite: non-unbiased pairs detected", e1.certificate.failing_pairs.empty() ? 1.0 : 0.0,
               tolerance, std::to_string(e1.certificate.failing_pairs.size()) + " failing pairs");
  }
  return report;
}

}  // namespace phasekit
