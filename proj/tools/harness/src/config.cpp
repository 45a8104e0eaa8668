#include "hcross_harness/config.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "hcross/approx.hpp"
#include "hcross/errors.hpp"
#include "hcross/serialization.hpp"
#include "hcross/version.hpp"

namespace hcross::harness {

std::vector<double> RunConfig::grid() const {
  if (n_points == 0) return octave_grid(n_min, n_max);
  return geometric_grid(n_min, n_max, n_points);
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["d"] = omega.d;
  j["r"] = omega.r;
  j["b"] = omega.b;
  j["l"] = omega.l;
  j["p"] = exponent_to_json(bp.p);
  j["theta"] = exponent_to_json(bp.theta);
  j["q"] = exponent_to_json(q);
  j["n-min"] = n_min;
  j["n-max"] = n_max;
  j["n-points"] = n_points;
  j["family"] = family;
  j["samples"] = samples;
  j["seed"] = seed;
  j["rel-tol"] = quad.rel_tol;
  j["max-grid"] = quad.max_grid;
  j["c5"] = c5;
  j["c6"] = c6;
  j["c7"] = c7;
  return j;
}

double parse_exponent(const std::string& text, const std::string& key) {
  if (text == "inf" || text == "infinity") return kInfinity;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(fmt::format("--{}: expected a number or 'inf', got '{}'", key, text));
}

std::vector<double> parse_b(const std::string& text, int d) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("--b: '{}' is not a number", item));
    }
  }
  if (out.size() == 1 && d > 1) out.assign(static_cast<std::size_t>(d), out.front());
  if (static_cast<int>(out.size()) != d) {
    throw ConfigError(fmt::format("--b: got {} values for d = {}", out.size(), d));
  }
  return out;
}

void check_caps(const RunConfig& cfg) {
  if (cfg.omega.d > kMaxDimension) {
    throw CapacityError(fmt::format("d = {} exceeds the desk-scale cap d <= {}", cfg.omega.d, kMaxDimension));
  }
  cfg.omega.validate();
  cfg.bp.validate();
  cfg.quad.validate();
  if (!(cfg.q >= 1.0)) throw ConfigError(fmt::format("--q must be >= 1, got {}", cfg.q));
  if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError(fmt::format("--out must be csv or json, got '{}'", cfg.format));
  }
}

std::vector<std::string> header_lines(const std::string& command, const RunConfig& cfg) {
  return {fmt::format("hcross {} {}", kVersion, command), fmt::format("config: {}", cfg.to_json().dump())};
}

}  // namespace hcross::harness
