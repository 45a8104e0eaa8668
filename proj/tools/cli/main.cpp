// hcross: command-line driver for the step hyperbolic cross toolkit.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "hcross/errors.hpp"
#include "hcross/version.hpp"
#include "hcross_harness/commands.hpp"
#include "hcross_harness/config.hpp"

namespace {

using hcross::harness::RunConfig;

// String-typed flags resolved after parsing (they need d or accept "inf").
struct RawFlags {
  std::string b = "0";
  std::string p = "2";
  std::string q = "2";
  std::string theta = "2";
};

void add_majorant_flags(CLI::App* cmd, RunConfig& cfg, RawFlags& raw) {
  cmd->add_option("--d", cfg.omega.d, "dimension");
  cmd->add_option("--r", cfg.omega.r, "smoothness exponent r");
  cmd->add_option("--b", raw.b, "log exponents b_1,...,b_d (one value is repeated)");
  cmd->add_option("--l", cfg.omega.l, "modulus order l");
}

void add_grid_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n-min", cfg.n_min, "smallest N");
  cmd->add_option("--n-max", cfg.n_max, "largest N");
  cmd->add_option("--n-points", cfg.n_points, "geometric grid points (0: one per octave)");
}

void add_besov_flags(CLI::App* cmd, RawFlags& raw) {
  cmd->add_option("--p", raw.p, "Besov integrability p (number or inf)");
  cmd->add_option("--theta", raw.theta, "Besov summability theta (number or inf)");
}

void add_quadrature_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--max-grid", cfg.quad.max_grid, "largest quadrature grid per dimension (power of two)");
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.format, "output format: csv or json");
  cmd->add_option("--output", cfg.output, "output path (default: stdout)");
}

std::string json_to_flag_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) out += (out.empty() ? "" : ",") + json_to_flag_value(item);
    return out;
  }
  return v.dump();
}

// Fills every option not given on the command line from a flat JSON object
// whose keys are flag names without the leading dashes.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hcross::ConfigError(fmt::format("cannot open config file '{}'", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw hcross::ConfigError(fmt::format("config file '{}': {}", path, e.what()));
  }
  if (!j.is_object()) throw hcross::ConfigError("config file must hold a flat JSON object");
  for (const auto& [key, value] : j.items()) {
    std::string flag = key;
    for (char& c : flag) {
      if (c == '_') c = '-';
    }
    if (flag == "config") throw hcross::ConfigError("config file may not name another config file");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd->get_option("--" + flag);
    } catch (const CLI::OptionNotFound&) {
      throw hcross::ConfigError(fmt::format("config file: unknown key '{}' for '{}'", key, cmd->get_name()));
    }
    if (opt->count() > 0) continue;  // flags override the file
    opt->add_result(json_to_flag_value(value));
    opt->run_callback();
  }
}

void resolve(RunConfig& cfg, const RawFlags& raw) {
  cfg.omega.b = hcross::harness::parse_b(raw.b, cfg.omega.d);
  cfg.bp.p = hcross::harness::parse_exponent(raw.p, "p");
  cfg.bp.theta = hcross::harness::parse_exponent(raw.theta, "theta");
  cfg.q = hcross::harness::parse_exponent(raw.q, "q");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Step hyperbolic cross approximation toolkit"};
  app.set_version_flag("--version", std::string("hcross ") + hcross::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  RawFlags raw;
  bool selfcheck = false;
  std::string config_path;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--config", config_path, "flat JSON file with flag values");
    return cmd;
  };

  auto* sets = add("sets", "index family sizes and |Q(N)| against its predicted order");
  add_majorant_flags(sets, cfg, raw);
  add_grid_flags(sets, cfg);
  add_output_flags(sets, cfg);

  auto* lemmas = add("lemmas", "tail sums over the complement of chi(N) against sums over Theta(N)");
  add_majorant_flags(lemmas, cfg, raw);
  add_grid_flags(lemmas, cfg);
  add_output_flags(lemmas, cfg);

  auto* norms = add("norms", "block and Vallee Poussin Besov norms of a polynomial file");
  add_majorant_flags(norms, cfg, raw);
  add_besov_flags(norms, raw);
  add_quadrature_flags(norms, cfg);
  norms->add_option("--input", cfg.input, "polynomial file")->required();
  norms->add_option("--output", cfg.output, "output path (default: stdout)");

  auto* kernels = add("kernels", "kernel constructions");
  kernels->add_flag("--selfcheck", selfcheck, "run the exact kernel profile checks");

  auto* rates = add("rates", "approximation error of the Q(N) projector against the theoretical rate");
  add_majorant_flags(rates, cfg, raw);
  add_besov_flags(rates, raw);
  add_grid_flags(rates, cfg);
  add_quadrature_flags(rates, cfg);
  add_output_flags(rates, cfg);
  rates->add_option("--q", raw.q, "error norm exponent q (number or inf)");
  rates->add_option("--family", cfg.family, "random_ball, shell, g3, g5 or g7");
  rates->add_option("--samples", cfg.samples, "random samples per N");
  rates->add_option("--seed", cfg.seed, "64-bit seed");
  rates->add_option("--c5", cfg.c5, "witness constant");
  rates->add_option("--c6", cfg.c6, "witness constant");
  rates->add_option("--c7", cfg.c7, "witness constant");

  auto* witness = add("witness", "write a lower-bound witness polynomial and a JSON sidecar");
  add_majorant_flags(witness, cfg, raw);
  add_besov_flags(witness, raw);
  add_quadrature_flags(witness, cfg);
  witness->add_option("--family", cfg.family, "g3, g5 or g7")->required();
  witness->add_option("--N", cfg.N, "threshold N")->required();
  witness->add_option("--output", cfg.output, "polynomial file path")->required();
  witness->add_option("--c5", cfg.c5, "witness constant");
  witness->add_option("--c6", cfg.c6, "witness constant");
  witness->add_option("--c7", cfg.c7, "witness constant");

  auto* verify = add("verify-all", "run the full acceptance suite");
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  verify->add_option("--output", cfg.output, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hcross::harness::kExitUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config_file(active, config_path);
    resolve(cfg, raw);

    std::ofstream file;
    if (!cfg.output.empty() && active != witness) {
      file.open(cfg.output);
      if (!file) throw hcross::ConfigError(fmt::format("cannot write '{}'", cfg.output));
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

    namespace h = hcross::harness;
    if (active == sets) return h::cmd_sets(cfg, out);
    if (active == lemmas) return h::cmd_lemmas(cfg, out);
    if (active == norms) return h::cmd_norms(cfg, out);
    if (active == rates) return h::cmd_rates(cfg, out);
    if (active == witness) return h::cmd_witness(cfg, std::cout);
    if (active == verify) return h::cmd_verify_all(cfg, out);
    if (active == kernels) {
      if (!selfcheck) throw hcross::ConfigError("kernels: nothing to do (did you mean --selfcheck?)");
      return h::cmd_kernels_selfcheck(out);
    }
    return hcross::harness::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hcross: " << e.what() << "\n";
    return hcross::harness::exit_code_for(e);
  }
}
