#include "hcross/serialization.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hcross/errors.hpp"

namespace hcross {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(fmt::format("missing key '{}'", key));
  return j.at(key);
}

}  // namespace

double exponent_from_json(const nlohmann::json& j, const char* key) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfinity;
  }
  throw ConfigError(fmt::format("key '{}' must be a number or \"inf\"", key));
}

nlohmann::json exponent_to_json(double value) {
  if (std::isinf(value)) return "inf";
  return value;
}

void to_json(nlohmann::json& j, const MajorantParams& m) {
  j = nlohmann::json{{"d", m.d}, {"r", m.r}, {"b", m.b}, {"l", m.l}};
}

void from_json(const nlohmann::json& j, MajorantParams& m) {
  try {
    m.d = require(j, "d").get<int>();
    m.r = require(j, "r").get<double>();
    const auto& b = require(j, "b");
    m.b = b.is_array() ? b.get<std::vector<double>>() : std::vector<double>(static_cast<std::size_t>(m.d), b.get<double>());
    m.l = require(j, "l").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("majorant JSON: {}", e.what()));
  }
  m.validate();
}

void to_json(nlohmann::json& j, const BesovParams& bp) {
  j = nlohmann::json{{"p", exponent_to_json(bp.p)}, {"theta", exponent_to_json(bp.theta)}};
}

void from_json(const nlohmann::json& j, BesovParams& bp) {
  bp.p = exponent_from_json(require(j, "p"), "p");
  bp.theta = exponent_from_json(require(j, "theta"), "theta");
  bp.validate();
}

}  // namespace hcross
