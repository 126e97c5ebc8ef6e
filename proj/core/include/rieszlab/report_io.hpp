#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace rieszlab {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit hash of a serialized input, as a fixed-width hex string.
/// Used to fingerprint domains/systems/weights inside report envelopes.
std::string fingerprint(const std::string& serialized);

/// Serializes JSON with deterministic key order (insertion order of
/// ordered_json) and doubles at 17 significant digits. Non-finite numbers
/// become null. `indent` < 0 emits a single line.
std::string dump_report_json(const nlohmann::ordered_json& value, int indent = 2);

/// Wrapper carrying tool metadata, the echoed configuration, input
/// fingerprints and wall time around a module report payload. The payload
/// and config are deterministic; wall_time_seconds is the only field two
/// identical runs may disagree on.
struct ReportEnvelope {
  std::string command;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;        // flat key=value echo
  std::map<std::string, std::string> fingerprints;  // name -> hash
  double wall_time_seconds = 0.0;
  nlohmann::ordered_json payload;

  nlohmann::ordered_json to_json() const;
  std::string dump(int indent = 2) const;
};

/// Reorders an arbitrary json value into ordered_json with keys sorted,
/// so payload serialization does not depend on construction order.
nlohmann::ordered_json canonicalize(const nlohmann::json& value);

}  // namespace rieszlab
