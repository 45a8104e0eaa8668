#include "hcross_harness/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "hcross/approx.hpp"
#include "hcross/besov.hpp"
#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/poly_io.hpp"
#include "hcross/serialization.hpp"
#include "hcross/version.hpp"
#include "hcross_harness/verify.hpp"

namespace hcross::harness {

namespace {

void print_header(std::ostream& out, const std::string& command, const RunConfig& cfg) {
  for (const auto& line : header_lines(command, cfg)) fmt::print(out, "# {}\n", line);
}

nlohmann::json meta(const std::string& command, const RunConfig& cfg) {
  return {{"tool", "hcross"}, {"version", kVersion}, {"command", command}, {"config", cfg.to_json()}};
}

double sum_b(const MajorantParams& m) {
  double s = 0.0;
  for (double bj : m.b) s += bj;
  return s;
}

void check_frequency_cap(const TrigPolynomial& f) {
  for (int deg : f.max_degree()) {
    if (deg > kMaxFrequency) {
      throw CapacityError(fmt::format("frequency {} exceeds the per-coordinate cap {}", deg, kMaxFrequency));
    }
  }
}

// The JSON number form of a double, so CSV and JSON agree digit for digit.
std::string num(double v) { return nlohmann::json(v).dump(); }

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ToleranceError*>(&e)) return kExitTolerance;
  if (dynamic_cast<const CapacityError*>(&e)) return kExitCapacity;
  return kExitUsage;
}

int cmd_sets(const RunConfig& cfg, std::ostream& out) {
  check_caps(cfg);
  const auto& om = cfg.omega;
  nlohmann::json rows = nlohmann::json::array();
  for (double N : cfg.grid()) {
    const double L = std::log2(N);
    const double prediction = std::pow(N, 1.0 / om.r) * std::pow(L, -sum_b(om) / om.r + om.d - 1);
    const std::uint64_t m = q_size(om, N);
    rows.push_back({{"N", N},
                    {"chi_count", chi(om, N).size()},
                    {"theta_count", theta(om, N).size()},
                    {"theta_prime_count", theta_prime(om, N).size()},
                    {"q_size", m},
                    {"lemmaB_prediction", prediction},
                    {"ratio", static_cast<double>(m) / prediction}});
  }
  if (cfg.format == "json") {
    out << nlohmann::json{{"meta", meta("sets", cfg)}, {"rows", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  print_header(out, "sets", cfg);
  out << "N,chi_count,theta_count,theta_prime_count,q_size,lemmaB_prediction,ratio\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", r["N"].dump(), r["chi_count"].dump(), r["theta_count"].dump(),
               r["theta_prime_count"].dump(), r["q_size"].dump(), r["lemmaB_prediction"].dump(), r["ratio"].dump());
  }
  return kExitOk;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  check_caps(cfg);
  const auto& om = cfg.omega;
  nlohmann::json rows = nlohmann::json::array();
  for (double N : cfg.grid()) {
    for (double p : {1.0, 2.0}) {
      for (double beta : {0.0, om.r / 2.0}) {
        const TailSum tail = tail_sum(om, N, p, beta);
        const double band_sum = theta_sum(om, N, p, beta);
        rows.push_back({{"N", N},
                        {"p", p},
                        {"beta", beta},
                        {"tail_sum", tail.value},
                        {"tail_bound", tail.tail_bound},
                        {"cutoff", tail.cutoff},
                        {"theta_sum", band_sum},
                        {"ratio", tail.value / band_sum}});
      }
    }
  }
  if (cfg.format == "json") {
    out << nlohmann::json{{"meta", meta("lemmas", cfg)}, {"rows", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  print_header(out, "lemmas", cfg);
  out << "N,p,beta,tail_sum,tail_bound,cutoff,theta_sum,ratio\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", r["N"].dump(), r["p"].dump(), r["beta"].dump(),
               r["tail_sum"].dump(), r["tail_bound"].dump(), r["cutoff"].dump(), r["theta_sum"].dump(),
               r["ratio"].dump());
  }
  return kExitOk;
}

int cmd_norms(const RunConfig& cfg, std::ostream& out) {
  check_caps(cfg);
  if (cfg.input.empty()) throw ConfigError("norms: --input <polynomial file> is required");
  const TrigPolynomial f = read_polynomial_file(cfg.input);
  if (f.dim() != cfg.omega.d) {
    throw ConfigError(fmt::format("norms: polynomial has d = {} but --d is {}", f.dim(), cfg.omega.d));
  }
  require_zero_free(f);
  check_frequency_cap(f);
  const double blocks = besov_norm_blocks(f, cfg.omega, cfg.bp, cfg.quad);
  const double vp = besov_norm_vp(f, cfg.omega, cfg.bp, cfg.quad);
  nlohmann::json j{{"meta", meta("norms", cfg)},
                   {"input", cfg.input},
                   {"terms", f.size()},
                   {"blocks_norm", blocks},
                   {"vp_norm", vp},
                   {"ratio", vp / blocks}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_kernels_selfcheck(std::ostream& out) {
  fmt::print(out, "# hcross {} kernels --selfcheck\n", kVersion);
  int failures = 0;
  for (const auto& row : kernel_selfcheck()) {
    fmt::print(out, "{:<34} {}  {}\n", row.name, row.pass ? "PASS" : "FAIL", row.detail);
    failures += !row.pass;
  }
  return failures == 0 ? kExitOk : kExitTolerance;
}

int cmd_rates(const RunConfig& cfg, std::ostream& out) {
  check_caps(cfg);
  RateExperiment exp;
  exp.family = parse_family(cfg.family);
  exp.omega = cfg.omega;
  exp.bp = cfg.bp;
  exp.q = cfg.q;
  exp.N_grid = cfg.grid();
  exp.samples = cfg.samples;
  exp.seed = cfg.seed;
  exp.quad = cfg.quad;
  exp.c5 = cfg.c5;
  exp.c6 = cfg.c6;
  exp.c7 = cfg.c7;
  const RateRegime regime = check_family_regime(exp);

  const auto start = std::chrono::steady_clock::now();
  const auto records = rate_experiment(exp);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  fmt::print(std::cerr, "rates: {} records in {:.2f}s\n", records.size(), took.count());

  nlohmann::json fit_json;
  std::string fit_line;
  try {
    const RateFit fit = fit_rate(records);
    fit_json = {{"rho", fit.rho},           {"lambda", fit.lambda},
                {"intercept", fit.intercept}, {"residual_rms", fit.residual_rms},
                {"condition", fit.condition}, {"collinear_warning", fit.collinear},
                {"two_point_slope", fit.two_point_slope}};
    fit_line = fmt::format("fit: rho={} lambda={} residual_rms={} condition={} two_point_slope={}{}", num(fit.rho),
                           num(fit.lambda), num(fit.residual_rms), num(fit.condition), num(fit.two_point_slope),
                           fit.collinear ? " (warning: rho and lambda are nearly collinear)" : "");
  } catch (const DomainError& e) {
    fit_json = {{"unavailable", e.what()}};
    fit_line = fmt::format("fit: unavailable ({})", e.what());
  }

  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) {
      rows.push_back({{"N", r.N}, {"M", r.M}, {"error", r.error}, {"theory", r.theory}, {"ratio", r.ratio}});
    }
    out << nlohmann::json{{"meta", meta("rates", cfg)},
                          {"regime", regime_name(regime.tag)},
                          {"rho", regime.rho},
                          {"lambda", regime.lambda},
                          {"records", rows},
                          {"fit", fit_json}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  print_header(out, "rates", cfg);
  fmt::print(out, "# regime {}: theory = M^-{} (log2 M)^{}\n", regime_name(regime.tag), num(regime.rho),
             num(regime.lambda));
  out << "N,M,error,theory,ratio\n";
  for (const auto& r : records) {
    fmt::print(out, "{},{},{},{},{}\n", num(r.N), num(r.M), num(r.error), num(r.theory), num(r.ratio));
  }
  fmt::print(out, "# {}\n", fit_line);
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  check_caps(cfg);
  if (cfg.output.empty()) throw ConfigError("witness: --output <path> is required");
  WitnessConfig wc;
  wc.omega = cfg.omega;
  wc.bp = cfg.bp;
  wc.N = cfg.N;
  wc.c5 = cfg.c5;
  wc.c6 = cfg.c6;
  wc.c7 = cfg.c7;
  wc.seed = cfg.seed;

  TrigPolynomial f(cfg.omega.d);
  nlohmann::json extra = nlohmann::json::object();
  if (cfg.family == "g3") {
    f = g3(wc);
    extra["theta_prime_size"] = theta_prime(cfg.omega, cfg.N).size();
  } else if (cfg.family == "g5") {
    f = g5(wc);
    const PacketLayout layout = packet_layout(wc);
    extra["u"] = layout.u;
    extra["v"] = layout.v;
    extra["theta_prime_size"] = layout.theta_prime_size;
  } else if (cfg.family == "g7") {
    f = g7(wc);
    extra["g6_peak"] = g6_peak(wc);
    extra["g7_scale"] = g7_scale(wc);
  } else {
    throw ConfigError(fmt::format("witness: --family must be g3, g5 or g7, got '{}'", cfg.family));
  }
  check_frequency_cap(f);

  auto comments = header_lines("witness", cfg);
  comments.push_back(fmt::format("family {} N {}", cfg.family, num(cfg.N)));
  write_polynomial_file(cfg.output, f, comments);

  const SupEstimate sup = sup_norm_estimate(f, cfg.quad);
  nlohmann::json side{{"meta", meta("witness", cfg)},
                      {"family", cfg.family},
                      {"N", cfg.N},
                      {"besov_norm", besov_norm(f, cfg.omega, cfg.bp, cfg.quad)},
                      {"spectrum_size", f.size()},
                      {"peak_value", sup.value},
                      {"l2_norm", std::sqrt(f.l2_norm_squared())},
                      {"diagnostics", extra}};
  const std::string sidecar = cfg.output + ".json";
  std::ofstream js(sidecar);
  if (!js) throw ConfigError(fmt::format("cannot write '{}'", sidecar));
  js << side.dump(2) << "\n";
  fmt::print(out, "wrote {} ({} terms) and {}\n", cfg.output, f.size(), sidecar);
  return kExitOk;
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
  fmt::print(out, "# hcross {} verify-all seed {}\n", kVersion, cfg.seed);
  const auto results = run_verification(cfg.seed, &std::cerr);
  int failures = 0;
  for (const auto& r : results) {
    out << format_result(r) << "\n";
    failures += !r.pass;
  }
  fmt::print(out, "# {} of {} criteria passed\n", results.size() - static_cast<std::size_t>(failures), results.size());
  return failures == 0 ? kExitOk : kExitTolerance;
}

}  // namespace hcross::harness
