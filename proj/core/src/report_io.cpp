#include "rieszlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rieszlab {

std::string fingerprint(const std::string& serialized) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialized) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_value(std::string& out, const nlohmann::ordered_json& v, int indent, int depth) {
  const std::string pad = indent >= 0 ? std::string(std::size_t(indent) * (depth + 1), ' ') : "";
  const std::string close_pad = indent >= 0 ? std::string(std::size_t(indent) * depth, ' ') : "";
  const char* nl = indent >= 0 ? "\n" : "";
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += nl;
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        append_escaped(out, it.key());
        out += indent >= 0 ? ": " : ":";
        dump_value(out, it.value(), indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      out += nl;
      bool first = true;
      for (const auto& item : v) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        dump_value(out, item, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += ']';
      return;
    }
    case nlohmann::ordered_json::value_t::string:
      append_escaped(out, v.get<std::string>());
      return;
    case nlohmann::ordered_json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case nlohmann::ordered_json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      return;
    case nlohmann::ordered_json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      return;
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_report_json(const nlohmann::ordered_json& value, int indent) {
  std::string out;
  dump_value(out, value, indent, 0);
  if (indent >= 0) out += '\n';
  return out;
}

nlohmann::ordered_json canonicalize(const nlohmann::json& value) {
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      nlohmann::ordered_json out = nlohmann::ordered_json::object();
      // nlohmann::json already iterates objects in sorted key order
      for (auto it = value.begin(); it != value.end(); ++it) {
        out[it.key()] = canonicalize(it.value());
      }
      return out;
    }
    case nlohmann::json::value_t::array: {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& item : value) out.push_back(canonicalize(item));
      return out;
    }
    default:
      return nlohmann::ordered_json(value);
  }
}

nlohmann::ordered_json ReportEnvelope::to_json() const {
  nlohmann::ordered_json js;
  js["tool"] = "riesz-lab";
  js["version"] = kToolVersion;
  js["command"] = command;
  js["seed"] = seed;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  js["config"] = cfg;
  nlohmann::ordered_json fps = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fingerprints) fps[k] = v;
  js["fingerprints"] = fps;
  js["wall_time_seconds"] = wall_time_seconds;
  js["payload"] = payload;
  return js;
}

std::string ReportEnvelope::dump(int indent) const { return dump_report_json(to_json(), indent); }

}  // namespace rieszlab
