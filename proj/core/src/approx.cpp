#include "hcross/approx.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/random_poly.hpp"

namespace hcross {

const char* regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::T31: return "T31";
    case RegimeTag::T32: return "T32";
    case RegimeTag::T33: return "T33";
  }
  return "?";
}

RateRegime classify_regime(const MajorantParams& omega, double p, double q, double theta) {
  omega.validate();
  if (!(theta >= 1.0) || std::isinf(theta)) {
    throw UnsupportedRegime(fmt::format("rate theorems need 1 <= theta < inf, got theta = {}", theta));
  }
  if (!(p >= 1.0) || std::isinf(p)) throw UnsupportedRegime(fmt::format("rate theorems need 1 <= p < inf, got p = {}", p));
  if (!(q >= 1.0)) throw UnsupportedRegime(fmt::format("rate theorems need q >= 1, got q = {}", q));

  double sum_b = 0.0;
  for (double bj : omega.b) sum_b += bj;
  const double r = omega.r;
  const double dm1 = omega.d - 1;
  auto pos = [](double a) { return std::max(a, 0.0); };

  RateRegime out{p, q, theta, RegimeTag::T31, r, 0.0};
  if (std::isinf(q)) {
    if (!(r > 1.0 / p)) {
      throw UnsupportedRegime(fmt::format("q = inf needs r > 1/p, got r = {}, p = {}", r, p));
    }
    out.tag = RegimeTag::T33;
    out.rho = r - 1.0 / p;
    out.lambda = -sum_b + dm1 * (r + 1.0 - 1.0 / p - 1.0 / theta);
    return out;
  }
  if (q > p) {
    throw UnsupportedRegime(fmt::format("no rate theorem for q = {} > p = {} with q < inf", q, p));
  }
  if (p >= 2.0) {
    out.tag = RegimeTag::T31;
    out.lambda = -sum_b + dm1 * (r + pos(0.5 - 1.0 / theta));
    return out;
  }
  if (p == 1.0 && q == 1.0) throw UnsupportedRegime("no rate theorem covers p = q = 1");
  out.tag = RegimeTag::T32;
  out.lambda = -sum_b + dm1 * (r + pos(1.0 / p - 1.0 / theta));
  return out;
}

double theoretical_rate(const RateRegime& regime, double M) {
  if (!(M >= 4.0)) throw DomainError(fmt::format("theoretical_rate needs M >= 4, got {}", M));
  return std::pow(M, -regime.rho) * std::pow(std::log2(M), regime.lambda);
}

TrigPolynomial project_q(const TrigPolynomial& f, const MajorantParams& omega, double N) {
  omega.validate();
  if (f.dim() != omega.d) throw DomainError("project_q: polynomial and majorant dimensions differ");
  return f.filter([&](std::span<const int> k) {
    if (std::find(k.begin(), k.end(), 0) != k.end()) return false;
    const DyadicIndex s = block_of(k);
    return in_chi(omega, s, N);
  });
}

double approx_error(const TrigPolynomial& f, const MajorantParams& omega, double N, double q,
                    const QuadratureSpec& quad) {
  return lp_norm(f - project_q(f, omega, N), q, quad);
}

const char* family_name(Family family) {
  switch (family) {
    case Family::random_ball: return "random_ball";
    case Family::shell: return "shell";
    case Family::g3: return "g3";
    case Family::g5: return "g5";
    case Family::g7: return "g7";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::random_ball, Family::shell, Family::g3, Family::g5, Family::g7}) {
    if (name == family_name(f)) return f;
  }
  throw ConfigError(fmt::format("unknown family '{}' (expected random_ball, shell, g3, g5 or g7)", name));
}

RateRegime check_family_regime(const RateExperiment& exp) {
  const double p = exp.bp.p;
  const double q = exp.q;
  const double theta = exp.bp.theta;
  const RateRegime regime = classify_regime(exp.omega, p, q, theta);
  switch (exp.family) {
    case Family::g3:
      if (regime.tag != RegimeTag::T31 || theta < 2.0) {
        throw UnsupportedRegime("g3 is a witness for the p >= 2, q <= p regime with theta >= 2");
      }
      break;
    case Family::g5:
      // At p = 2 the T31 and T32 rates coincide, so T31-tagged (2, q) is fine.
      if (!(p <= 2.0 && q <= p && theta >= p)) {
        throw UnsupportedRegime("g5 is a witness for p <= 2, q <= p, theta >= p");
      }
      break;
    case Family::g7:
      if (regime.tag != RegimeTag::T33) throw UnsupportedRegime("g7 is a witness for q = inf");
      break;
    case Family::random_ball:
    case Family::shell:
      break;
  }
  return regime;
}

namespace {

WitnessConfig witness_config(const RateExperiment& exp, double N) {
  WitnessConfig cfg;
  cfg.omega = exp.omega;
  cfg.bp = exp.bp;
  cfg.N = N;
  cfg.c5 = exp.c5;
  cfg.c6 = exp.c6;
  cfg.c7 = exp.c7;
  cfg.seed = exp.seed;
  return cfg;
}

bool is_witness(Family f) { return f == Family::g3 || f == Family::g5 || f == Family::g7; }

}  // namespace

TrigPolynomial family_member(const RateExperiment& exp, std::size_t n_index, int sample) {
  const double N = exp.N_grid.at(n_index);
  switch (exp.family) {
    case Family::g3: return g3(witness_config(exp, N));
    case Family::g5: return g5(witness_config(exp, N));
    case Family::g7: return g7(witness_config(exp, N));
    case Family::shell: {
      auto rng = make_stream(exp.seed, {n_index, static_cast<std::uint64_t>(sample)});
      const IndexFamily band = theta(exp.omega, N);
      if (band.empty()) throw DomainError(fmt::format("Theta(N) is empty for N = {}", N));
      TrigPolynomial f(exp.omega.d);
      for (const auto& s : band.members) {
        TrigPolynomial u = random_in_spectrum(rho(s), rng, CoefficientLaw::gaussian);
        u *= Complex(omega_dyadic(exp.omega, s) / lp_norm(u, exp.bp.p, exp.quad));
        f += u;
      }
      return normalize_to_ball(f, exp.omega, exp.bp, exp.quad);
    }
    case Family::random_ball: {
      auto rng = make_stream(exp.seed, {n_index, static_cast<std::uint64_t>(sample)});
      const IndexFamily blocks = chi(exp.omega, std::exp2(exp.omega.l) * N);
      if (blocks.empty()) throw DomainError(fmt::format("Q(2^l N) is empty for N = {}", N));
      TrigPolynomial f(exp.omega.d);
      for (const auto& s : blocks.members) {
        TrigPolynomial u = random_in_spectrum(rho(s), rng, CoefficientLaw::gaussian);
        long long norm1 = 0;
        for (int sj : s) norm1 += sj;
        u *= Complex(omega_dyadic(exp.omega, s) * std::exp2(-0.5 * static_cast<double>(norm1)));
        f += u;
      }
      return normalize_to_ball(f, exp.omega, exp.bp, exp.quad);
    }
  }
  throw ConfigError("unknown family");
}

std::vector<ExperimentRecord> rate_experiment(const RateExperiment& exp) {
  exp.omega.validate();
  exp.bp.validate();
  exp.quad.validate();
  if (exp.N_grid.size() < 5) throw DomainError("rate_experiment needs at least 5 grid points");
  for (std::size_t i = 1; i < exp.N_grid.size(); ++i) {
    if (!(exp.N_grid[i] > exp.N_grid[i - 1])) throw DomainError("rate_experiment: N grid must be increasing");
  }
  if (exp.samples < 1) throw DomainError("rate_experiment needs samples >= 1");
  const RateRegime regime = check_family_regime(exp);
  const int samples = is_witness(exp.family) ? 1 : exp.samples;

  std::vector<ExperimentRecord> out;
  for (std::size_t i = 0; i < exp.N_grid.size(); ++i) {
    ExperimentRecord rec;
    rec.N = exp.N_grid[i];
    rec.M = static_cast<double>(q_size(exp.omega, rec.N));
    for (int k = 0; k < samples; ++k) {
      const TrigPolynomial f = family_member(exp, i, k);
      rec.error = std::max(rec.error, approx_error(f, exp.omega, rec.N, exp.q, exp.quad));
    }
    rec.theory = theoretical_rate(regime, rec.M);
    rec.ratio = rec.error / rec.theory;
    out.push_back(rec);
  }
  return out;
}

RateFit fit_rate(std::span<const ExperimentRecord> records) {
  if (records.size() < 5) throw DomainError("fit_rate needs at least 5 records");
  double m_min = kInfinity;
  double m_max = 0.0;
  for (const auto& r : records) {
    if (!(r.M >= 4.0) || !(r.error > 0.0)) throw DomainError("fit_rate needs M >= 4 and error > 0 in every record");
    m_min = std::min(m_min, r.M);
    m_max = std::max(m_max, r.M);
  }
  if (m_max == m_min) throw DomainError("fit_rate: all records share one M");
  if (std::log2(m_max / m_min) < 3.0) throw DomainError("fit_rate: M values must span at least 3 octaves");

  const auto n = static_cast<Eigen::Index>(records.size());
  Eigen::MatrixXd X(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lm = std::log2(records[static_cast<std::size_t>(i)].M);
    X(i, 0) = 1.0;
    X(i, 1) = lm;
    X(i, 2) = std::log2(lm);
    y(i) = std::log2(records[static_cast<std::size_t>(i)].error);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd coef = svd.solve(y);
  const auto& sv = svd.singularValues();

  RateFit fit;
  fit.intercept = coef(0);
  fit.rho = -coef(1);
  fit.lambda = coef(2);
  fit.residual_rms = std::sqrt((X * coef - y).squaredNorm() / static_cast<double>(n));
  fit.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : kInfinity;
  fit.collinear = fit.condition > 1e4;

  std::vector<ExperimentRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.M < b.M; });
  const auto& hi = sorted.back();
  auto lo = std::find_if(sorted.rbegin(), sorted.rend(), [&](const auto& r) { return r.M < hi.M; });
  fit.two_point_slope = -(std::log2(hi.error) - std::log2(lo->error)) / (std::log2(hi.M) - std::log2(lo->M));
  return fit;
}

std::vector<double> geometric_grid(double n_min, double n_max, int points) {
  if (!(n_min > 0.0) || !(n_max > n_min) || points < 2) {
    throw ConfigError(fmt::format("geometric grid needs 0 < n_min < n_max and >= 2 points, got {}, {}, {}", n_min,
                                  n_max, points));
  }
  const double a = std::log2(n_min);
  const double step = (std::log2(n_max) - a) / (points - 1);
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = std::exp2(a + step * i);
  out.front() = n_min;
  out.back() = n_max;
  return out;
}

std::vector<double> octave_grid(double n_min, double n_max) {
  if (!(n_min > 0.0) || !(n_max >= n_min)) throw ConfigError("octave grid needs 0 < n_min <= n_max");
  std::vector<double> out;
  for (double n = n_min; n <= n_max * (1.0 + 1e-12); n *= 2.0) out.push_back(n);
  return out;
}

}  // namespace hcross
