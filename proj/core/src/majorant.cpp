#include "hcross/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hcross/errors.hpp"

namespace hcross {

void MajorantParams::validate() const {
  if (d < 1) throw ConfigError(fmt::format("majorant: d must be >= 1, got {}", d));
  if (static_cast<int>(b.size()) != d) {
    throw ConfigError(fmt::format("majorant: b has {} entries, expected d = {}", b.size(), d));
  }
  if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError(fmt::format("majorant: r must be > 0, got {}", r));
  if (!(r < static_cast<double>(l))) {
    throw ConfigError(fmt::format("majorant: need r < l, got r = {}, l = {}", r, l));
  }
  for (int j = 0; j < d; ++j) {
    if (!std::isfinite(b[j]) || !(b[j] < r)) {
      throw ConfigError(fmt::format("majorant: need b_{} < r, got b_{} = {}", j + 1, j + 1, b[j]));
    }
  }
}

double MajorantParams::coordinate_log_weight(int j, int s) const {
  return r * static_cast<double>(s) + b[static_cast<std::size_t>(j)] * std::log2(static_cast<double>(s));
}

double MajorantParams::log_weight(std::span<const int> s) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) acc += coordinate_log_weight(static_cast<int>(j), s[j]);
  return acc;
}

MajorantParams MajorantParams::isotropic(int d, double r, double b, int l) {
  MajorantParams p;
  p.d = d;
  p.r = r;
  p.b.assign(static_cast<std::size_t>(d), b);
  p.l = l;
  return p;
}

double omega_eval(const MajorantParams& params, std::span<const double> t) {
  params.validate();
  if (static_cast<int>(t.size()) != params.d) {
    throw DomainError(fmt::format("omega_eval: t has {} entries, expected {}", t.size(), params.d));
  }
  for (double tj : t) {
    if (!(tj >= 0.0)) throw DomainError(fmt::format("omega_eval: t_j must be >= 0, got {}", tj));
  }
  if (std::any_of(t.begin(), t.end(), [](double tj) { return tj == 0.0; })) return 0.0;
  double value = 1.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double log_factor = std::max(1.0, std::log2(1.0 / t[j]));
    value *= std::pow(t[j], params.r) / std::pow(log_factor, params.b[j]);
  }
  return value;
}

double omega_dyadic(const MajorantParams& params, std::span<const int> s) {
  params.validate();
  if (static_cast<int>(s.size()) != params.d) {
    throw DomainError(fmt::format("omega_dyadic: s has {} entries, expected {}", s.size(), params.d));
  }
  for (int sj : s) {
    if (sj < 1) throw DomainError(fmt::format("omega_dyadic: s_j must be >= 1, got {}", sj));
  }
  return std::exp2(-params.log_weight(s));
}

namespace {

constexpr double kRelSlack = 1e-12;
constexpr double kTrendGrowth = 1.01;

struct PairExtreme {
  double value;
  int m1;  // index of tau1 = 2^{-m1} (the smaller tau)
  int m2;
};

// Best constant over tau1 <= tau2 on m in [0, depth]; ratio(m1, m2) is the
// quantity compared against the constant.
template <class Ratio, class Better>
PairExtreme scan_pairs(int depth, Ratio ratio, Better better, double init) {
  PairExtreme best{init, 0, 0};
  for (int m2 = 0; m2 <= depth; ++m2) {
    for (int m1 = m2; m1 <= depth; ++m1) {
      const double v = ratio(m1, m2);
      if (better(v, best.value)) best = {v, m1, m2};
    }
  }
  return best;
}

}  // namespace

MajorantAudit verify_majorant_axioms(const MajorantParams& params, double alpha, double gamma,
                                     int probe_depth) {
  params.validate();
  if (!(alpha > 0.0)) throw DomainError("verify_majorant_axioms: alpha must be > 0");
  if (!(gamma > 0.0) || !(gamma < params.l)) {
    throw DomainError("verify_majorant_axioms: gamma must lie in (0, l)");
  }
  if (probe_depth < 2) throw DomainError("verify_majorant_axioms: probe_depth must be >= 2");

  MajorantAudit audit;
  const int d = params.d;
  const double l = static_cast<double>(params.l);
  auto tau = [](int m) { return std::exp2(-static_cast<double>(m)); };

  // Others are held at tau = 1, 2^{-depth/2}, 2^{-depth}.
  const std::vector<int> fixed_levels{0, probe_depth / 2, probe_depth};

  // Condition 1: positivity inside, zero on the boundary.
  {
    std::vector<double> t(static_cast<std::size_t>(d), 0.5);
    for (int j = 0; j < d; ++j) {
      for (int m = 0; m <= probe_depth; ++m) {
        t[static_cast<std::size_t>(j)] = tau(m);
        if (!(omega_eval(params, t) > 0.0)) {
          audit.positivity = false;
          audit.violations.push_back({"positivity", j, tau(m), tau(m), omega_eval(params, t), 0.0});
        }
      }
      t[static_cast<std::size_t>(j)] = 0.0;
      if (omega_eval(params, t) != 0.0) {
        audit.positivity = false;
        audit.violations.push_back({"positivity", j, 0.0, 0.0, omega_eval(params, t), 0.0});
      }
      t[static_cast<std::size_t>(j)] = 0.5;
    }
  }

  const long long max_multiplier = 1LL << std::min(probe_depth, 20);

  for (int j = 0; j < d; ++j) {
    for (int level : fixed_levels) {
      std::vector<double> t(static_cast<std::size_t>(d), tau(level));
      auto phi = [&](double x) {
        t[static_cast<std::size_t>(j)] = x;
        return omega_eval(params, t);
      };

      // Condition 2: nondecreasing along the dyadic probe.
      for (int m = 0; m < probe_depth; ++m) {
        const double lo = phi(tau(m + 1));
        const double hi = phi(tau(m));
        if (lo > hi * (1.0 + kRelSlack)) {
          audit.monotone = false;
          audit.violations.push_back({"monotone", j, tau(m + 1), tau(m), lo, hi});
        }
      }

      // Condition 3 for integer multipliers on one coordinate.
      for (int m = 0; m <= probe_depth; ++m) {
        const double base = phi(tau(m));
        for (long long mu = 1; mu <= max_multiplier; ++mu) {
          const double scaled = phi(static_cast<double>(mu) * tau(m));
          const double bound = std::pow(static_cast<double>(mu), l) * base;
          if (scaled > bound * (1.0 + kRelSlack)) {
            audit.scaling = false;
            audit.violations.push_back({"scaling", j, tau(m), static_cast<double>(mu) * tau(m), scaled, bound});
            break;
          }
        }
      }

      // (S): phi(tau)/tau^alpha almost increasing.
      std::vector<double> s_ratio(static_cast<std::size_t>(probe_depth) + 1);
      std::vector<double> sl_ratio(s_ratio.size());
      for (int m = 0; m <= probe_depth; ++m) {
        const double v = phi(tau(m));
        s_ratio[static_cast<std::size_t>(m)] = v / std::pow(tau(m), alpha);
        sl_ratio[static_cast<std::size_t>(m)] = v / std::pow(tau(m), gamma);
      }
      auto s_pair = [&](int m1, int m2) {
        return s_ratio[static_cast<std::size_t>(m1)] / s_ratio[static_cast<std::size_t>(m2)];
      };
      auto sl_pair = [&](int m1, int m2) {
        return sl_ratio[static_cast<std::size_t>(m1)] / sl_ratio[static_cast<std::size_t>(m2)];
      };
      auto larger = [](double a, double b) { return a > b; };
      auto smaller = [](double a, double b) { return a < b; };

      const PairExtreme c1_full = scan_pairs(probe_depth, s_pair, larger, 0.0);
      const PairExtreme c1_half = scan_pairs(probe_depth / 2, s_pair, larger, 0.0);
      audit.c1 = std::max(audit.c1, c1_full.value);
      if (c1_full.value > kTrendGrowth * c1_half.value) {
        audit.s_condition = false;
        audit.violations.push_back({"S", j, tau(c1_full.m1), tau(c1_full.m2), c1_full.value, c1_half.value});
      }

      const PairExtreme c2_full = scan_pairs(probe_depth, sl_pair, smaller, std::numeric_limits<double>::infinity());
      const PairExtreme c2_half =
          scan_pairs(probe_depth / 2, sl_pair, smaller, std::numeric_limits<double>::infinity());
      audit.c2 = std::min(audit.c2, c2_full.value);
      if (c2_full.value * kTrendGrowth < c2_half.value) {
        audit.sl_condition = false;
        audit.violations.push_back({"S_l", j, tau(c2_full.m1), tau(c2_full.m2), c2_full.value, c2_half.value});
      }
    }
  }

  // Condition 3 with the same multiplier on every coordinate.
  for (int m = 0; m <= probe_depth; ++m) {
    std::vector<double> t(static_cast<std::size_t>(d), tau(m));
    const double base = omega_eval(params, t);
    for (long long mu = 1; mu <= max_multiplier; ++mu) {
      std::vector<double> scaled_t(static_cast<std::size_t>(d), static_cast<double>(mu) * tau(m));
      const double scaled = omega_eval(params, scaled_t);
      const double bound = std::pow(static_cast<double>(mu), l * d) * base;
      if (scaled > bound * (1.0 + kRelSlack)) {
        audit.scaling = false;
        audit.violations.push_back({"scaling", -1, tau(m), static_cast<double>(mu) * tau(m), scaled, bound});
        break;
      }
    }
  }
  return audit;
}

}  // namespace hcross
