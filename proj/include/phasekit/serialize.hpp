// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phasekit/fock_space.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/report.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace phasekit {

using Json = nlohmann::json;

/// Malformed input; what() starts with the JSON pointer of the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Complex data is written as separate "re"/"im" arrays, matrices row-major.
// Doubles are emitted in shortest round-trip form, so parse(dump(x)) == x
// bit for bit.

[[nodiscard]] Json to_json(const LinearOperator& op);
[[nodiscard]] LinearOperator linear_operator_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const StateVector& s);
[[nodiscard]] StateVector state_vector_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const PhaseOperator& op);
[[nodiscard]] PhaseOperator phase_operator_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const PhaseStateFamily& f);
[[nodiscard]] PhaseStateFamily phase_state_family_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const VectorPhaseState& v);
[[nodiscard]] VectorPhaseState vector_phase_state_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const MubCertificate& c);
[[nodiscard]] MubCertificate mub_certificate_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const MubSet& set);
[[nodiscard]] MubSet mub_set_from_json(const Json& j, const std::string& path = "");

[[nodiscard]] Json to_json(const VerificationReport& r);
[[nodiscard]] VerificationReport report_from_json(const Json& j, const std::string& path = "");

/// Parses text, turning syntax errors into SchemaError at path "".
[[nodiscard]] Json parse_json(const std::string& text);

}  // namespace phasekit
