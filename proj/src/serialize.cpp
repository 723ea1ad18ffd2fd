// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/serialize.hpp"

#include <cmath>
#include <limits>

namespace phasekit {

namespace {

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
  return *it;
}

template <typename T>
T scalar(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  try {
    return v.get<T>();
  } catch (const Json::exception& e) {
    throw SchemaError(path + "/" + key, std::string("wrong type: ") + e.what());
  }
}

/// Non-finite residuals have no JSON number form; they are written as null.
Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_or_nan(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw SchemaError(path + "/" + key, "expected a number or null");
  return v.get<double>();
}

std::vector<double> doubles(const Json& j, const std::string& path, const char* key, std::size_t expected) {
  const Json& v = field(j, path, key);
  const std::string where = path + "/" + key;
  if (!v.is_array()) throw SchemaError(where, "expected an array");
  if (v.size() != expected) {
    throw SchemaError(where, "length mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(v.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw SchemaError(where + "/" + std::to_string(i), "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

Json basis_json(const FockSpace& fs) {
  Json b = Json::array();
  for (const BasisState& s : fs.states()) b.push_back({s.n1, s.n2});
  return b;
}

std::string kind_name(ShellKind k) { return k == ShellKind::Quenched ? "quenched" : "window"; }

/// Rebuilds the space from "dim", "basis" and the optional "kind".
SpacePtr space_from_json(const Json& j, const std::string& path) {
  const auto dim = scalar<long long>(j, path, "dim");
  int shell = 0;
  while ((shell + 1LL) * (shell + 2LL) / 2 < dim) ++shell;
  if ((shell + 1LL) * (shell + 2LL) / 2 != dim) {
    throw SchemaError(path + "/dim", "dimension " + std::to_string(dim) + " is not a triangular number");
  }
  ShellKind kind = ShellKind::Quenched;
  if (j.contains("kind")) {
    const auto name = scalar<std::string>(j, path, "kind");
    if (name == "window") {
      kind = ShellKind::Window;
    } else if (name != "quenched") {
      throw SchemaError(path + "/kind", "expected 'quenched' or 'window'");
    }
  }
  SpacePtr space = make_space(shell, kind);
  const Json& basis = field(j, path, "basis");
  if (!basis.is_array() || static_cast<long long>(basis.size()) != dim) {
    throw SchemaError(path + "/basis", "length mismatch: expected " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisState& s = space->state(static_cast<Index>(i));
    const Json& e = basis[i];
    if (!e.is_array() || e.size() != 2 || e[0] != s.n1 || e[1] != s.n2) {
      throw SchemaError(path + "/basis/" + std::to_string(i),
                        "expected [" + std::to_string(s.n1) + "," + std::to_string(s.n2) + "]");
    }
  }
  return space;
}

Json matrix_fields(const Matrix& m, Json out) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Matrix matrix_from(const Json& j, const std::string& path, Index rows, Index cols) {
  const auto n = static_cast<std::size_t>(rows * cols);
  const auto re = doubles(j, path, "re", n);
  const auto im = doubles(j, path, "im", n);
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const auto i = static_cast<std::size_t>(r * cols + c);
      m(r, c) = Complex(re[i], im[i]);
    }
  }
  return m;
}

const Json& array_field(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (!v.is_array()) throw SchemaError(path + "/" + key, "expected an array");
  return v;
}

}  // namespace

Json to_json(const LinearOperator& op) {
  Json out = {{"label", op.label},
              {"dim", op.space->dim()},
              {"kind", kind_name(op.space->kind())},
              {"basis", basis_json(*op.space)}};
  return matrix_fields(op.matrix, std::move(out));
}

LinearOperator linear_operator_from_json(const Json& j, const std::string& path) {
  SpacePtr space = space_from_json(j, path);
  Matrix m = matrix_from(j, path, space->dim(), space->dim());
  return {std::move(m), space, scalar<std::string>(j, path, "label")};
}

Json to_json(const StateVector& s) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < s.amps.size(); ++i) {
    re.push_back(s.amps(i).real());
    im.push_back(s.amps(i).imag());
  }
  return {{"label", s.label},       {"dim", s.space->dim()}, {"kind", kind_name(s.space->kind())},
          {"basis", basis_json(*s.space)}, {"amps_re", std::move(re)}, {"amps_im", std::move(im)}};
}

StateVector state_vector_from_json(const Json& j, const std::string& path) {
  SpacePtr space = space_from_json(j, path);
  const auto n = static_cast<std::size_t>(space->dim());
  const auto re = doubles(j, path, "amps_re", n);
  const auto im = doubles(j, path, "amps_im", n);
  Vector v(space->dim());
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Index>(i)) = Complex(re[i], im[i]);
  return {std::move(v), space, scalar<std::string>(j, path, "label")};
}

Json to_json(const PhaseOperator& op) {
  Json out = to_json(op.op);
  out["family"] = to_string(op.family);
  Json blocks = Json::array();
  for (const LinearOperator& b : op.block_ops) blocks.push_back(to_json(b));
  out["blocks"] = std::move(blocks);
  return out;
}

PhaseOperator phase_operator_from_json(const Json& j, const std::string& path) {
  LinearOperator op = linear_operator_from_json(j, path);
  PhaseFamily family;
  try {
    family = phase_family_from_string(scalar<std::string>(j, path, "family"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + "/family", e.what());
  }
  std::vector<LinearOperator> blocks;
  const Json& arr = array_field(j, path, "blocks");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    LinearOperator b = linear_operator_from_json(arr[i], path + "/blocks/" + std::to_string(i));
    b.space = op.space;
    blocks.push_back(std::move(b));
  }
  return {std::move(op), family, std::move(blocks)};
}

Json to_json(const PhaseStateFamily& f) {
  Json states = Json::array();
  for (const StateVector& s : f.states) states.push_back(to_json(s));
  return {{"family", to_string(f.family)},
          {"l", f.l ? Json(*f.l) : Json(nullptr)},
          {"phi", f.phi},
          {"states", std::move(states)}};
}

PhaseStateFamily phase_state_family_from_json(const Json& j, const std::string& path) {
  PhaseStateFamily f{PhaseFamily::Ed, std::nullopt, 0.0, {}};
  try {
    f.family = phase_family_from_string(scalar<std::string>(j, path, "family"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + "/family", e.what());
  }
  if (!field(j, path, "l").is_null()) f.l = scalar<int>(j, path, "l");
  f.phi = scalar<double>(j, path, "phi");
  const Json& arr = array_field(j, path, "states");
  SpacePtr shared;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    StateVector s = state_vector_from_json(arr[i], path + "/states/" + std::to_string(i));
    if (shared && *shared == *s.space) s.space = shared;
    shared = s.space;
    f.states.push_back(std::move(s));
  }
  return f;
}

Json to_json(const VectorPhaseState& v) {
  Json lines = Json::array();
  for (const StateVector& s : v.blocks) lines.push_back(to_json(s));
  return {{"family", to_string(v.family)}, {"l", v.l}, {"m", v.m}, {"phi", v.phi}, {"lines", std::move(lines)}};
}

VectorPhaseState vector_phase_state_from_json(const Json& j, const std::string& path) {
  VectorPhaseState v{PhaseFamily::E1d, 0, 0, 0.0, {}};
  try {
    v.family = phase_family_from_string(scalar<std::string>(j, path, "family"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + "/family", e.what());
  }
  v.l = scalar<int>(j, path, "l");
  v.m = scalar<int>(j, path, "m");
  v.phi = scalar<double>(j, path, "phi");
  const Json& arr = array_field(j, path, "lines");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    v.blocks.push_back(state_vector_from_json(arr[i], path + "/lines/" + std::to_string(i)));
  }
  return v;
}

Json to_json(const MubCertificate& c) {
  Json failing = Json::array();
  for (const auto& [a, b] : c.failing_pairs) failing.push_back({a, b});
  return {{"max_deviation", number_or_null(c.max_deviation)},
          {"max_orthonormality", number_or_null(c.max_orthonormality)},
          {"pairs_checked", c.pairs_checked},
          {"prime", c.prime},
          {"failing_pairs", std::move(failing)}};
}

MubCertificate mub_certificate_from_json(const Json& j, const std::string& path) {
  MubCertificate c;
  c.max_deviation = number_or_nan(j, path, "max_deviation");
  c.max_orthonormality = j.contains("max_orthonormality") ? number_or_nan(j, path, "max_orthonormality") : 0.0;
  c.pairs_checked = scalar<long long>(j, path, "pairs_checked");
  c.prime = scalar<bool>(j, path, "prime");
  if (j.contains("failing_pairs")) {
    const Json& arr = array_field(j, path, "failing_pairs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Json& p = arr[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw SchemaError(path + "/failing_pairs/" + std::to_string(i), "expected [i, j]");
      }
      c.failing_pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  return c;
}

Json to_json(const MubSet& set) {
  Json bases = Json::array();
  for (const Basis& b : set.bases) bases.push_back(matrix_fields(b.vectors, {{"label", b.label}}));
  Json table = Json::array();
  for (Index r = 0; r < set.overlap_table.rows(); ++r) {
    for (Index c = 0; c < set.overlap_table.cols(); ++c) table.push_back(number_or_null(set.overlap_table(r, c)));
  }
  return {{"N", set.N},
          {"route", to_string(set.route)},
          {"bases", std::move(bases)},
          {"overlap_table", std::move(table)},
          {"certificate", to_json(set.certificate)}};
}

MubSet mub_set_from_json(const Json& j, const std::string& path) {
  MubSet set;
  set.N = scalar<int>(j, path, "N");
  if (set.N < 1) throw SchemaError(path + "/N", "must be positive");
  try {
    set.route = mub_route_from_string(scalar<std::string>(j, path, "route"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + "/route", e.what());
  }
  const Json& arr = array_field(j, path, "bases");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/bases/" + std::to_string(i);
    set.bases.push_back({scalar<std::string>(arr[i], p, "label"), matrix_from(arr[i], p, set.N, set.N)});
  }
  const auto nb = static_cast<Index>(set.bases.size());
  set.overlap_table = RealMatrix::Zero(nb, nb);
  if (j.contains("overlap_table")) {
    const Json& t = array_field(j, path, "overlap_table");
    if (t.size() != static_cast<std::size_t>(nb * nb)) {
      throw SchemaError(path + "/overlap_table", "length mismatch: expected " + std::to_string(nb * nb));
    }
    for (Index r = 0; r < nb; ++r) {
      for (Index c = 0; c < nb; ++c) {
        const Json& e = t[static_cast<std::size_t>(r * nb + c)];
        set.overlap_table(r, c) = e.is_null() ? std::numeric_limits<double>::quiet_NaN() : e.get<double>();
      }
    }
  }
  set.certificate = mub_certificate_from_json(field(j, path, "certificate"), path + "/certificate");
  return set;
}

Json to_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (const CheckEntry& e : r.entries()) {
    Json split = nullptr;
    if (e.split) split = {{"interior", number_or_null(e.split->interior)}, {"shell", number_or_null(e.split->shell)}};
    entries.push_back({{"name", e.name},
                       {"max_residual", number_or_null(e.max_residual)},
                       {"pass", e.pass},
                       {"split", std::move(split)},
                       {"note", e.note}});
  }
  return {{"entries", std::move(entries)}, {"overall", r.overall()}, {"count", r.size()}};
}

VerificationReport report_from_json(const Json& j, const std::string& path) {
  VerificationReport r;
  const Json& arr = array_field(j, path, "entries");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/entries/" + std::to_string(i);
    CheckEntry e;
    e.name = scalar<std::string>(arr[i], p, "name");
    e.max_residual = number_or_nan(arr[i], p, "max_residual");
    e.pass = scalar<bool>(arr[i], p, "pass");
    const Json& s = field(arr[i], p, "split");
    if (!s.is_null()) e.split = ResidualSplit{number_or_nan(s, p + "/split", "interior"), number_or_nan(s, p + "/split", "shell")};
    if (arr[i].contains("note")) e.note = scalar<std::string>(arr[i], p, "note");
    r.add(std::move(e));
  }
  if (j.contains("overall") && scalar<bool>(j, path, "overall") != r.overall()) {
    throw SchemaError(path + "/overall", "does not match the conjunction of entry passes");
  }
  return r;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace phasekit
