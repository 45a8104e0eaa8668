#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcross/besov.hpp"
#include "hcross/lp_norm.hpp"
#include "hcross/majorant.hpp"

namespace hcross::harness {

/// Everything a subcommand may read. Flags and the optional JSON config file
/// both land here; flags win.
struct RunConfig {
  MajorantParams omega = MajorantParams::isotropic(2, 1.0, 0.0, 2);
  BesovParams bp;
  double q = 2.0;

  double n_min = 64.0;
  double n_max = 1048576.0;
  int n_points = 0;  // 0: one point per octave

  std::string family = "shell";
  int samples = 4;
  std::uint64_t seed = 1;
  QuadratureSpec quad;
  double c5 = 1.0;
  double c6 = 1.0;
  double c7 = 1.0;

  std::string format = "csv";  // csv or json
  std::string output;          // empty: stdout
  std::string input;           // norms: polynomial file
  double N = 4096.0;           // witness

  std::vector<double> grid() const;
  nlohmann::json to_json() const;
};

/// Desk-scale caps enforced before any heavy work.
inline constexpr int kMaxDimension = 3;
inline constexpr int kMaxFrequency = 1 << 14;

/// Parses "2", "1.5", "inf". Throws ConfigError naming `key` otherwise.
double parse_exponent(const std::string& text, const std::string& key);

/// "0.5,0.25" -> {0.5, 0.25}; a single value is repeated d times.
std::vector<double> parse_b(const std::string& text, int d);

/// Rejects d above kMaxDimension (CapacityError) and invalid parameters (ConfigError).
void check_caps(const RunConfig& cfg);

/// Header comment lines shared by every output: tool version, command, config echo.
std::vector<std::string> header_lines(const std::string& command, const RunConfig& cfg);

}  // namespace hcross::harness
