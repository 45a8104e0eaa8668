#include "hcross/lp_norm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "hcross/errors.hpp"
#include "hcross/fft_grid.hpp"

namespace hcross {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw ConfigError(fmt::format("quadrature: rel_tol must be > 0, got {}", rel_tol));
  if (!std::has_single_bit(max_grid)) {
    throw ConfigError(fmt::format("quadrature: max_grid must be a power of two, got {}", max_grid));
  }
}

namespace {

bool is_even_integer(double p) { return std::isfinite(p) && p >= 2.0 && p == 2.0 * std::floor(p / 2.0); }

void check_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError(fmt::format("L_p norm needs p >= 1, got {}", p));
}

// |z|^p with exact integer powers where possible.
double abs_power(Complex z, double p) {
  if (p == 1.0) return std::abs(z);
  if (p == 2.0) return std::norm(z);
  if (is_even_integer(p) && p <= 64.0) {
    const double n2 = std::norm(z);
    double out = 1.0;
    for (int e = static_cast<int>(p) / 2; e > 0; --e) out *= n2;
    return out;
  }
  return std::pow(std::abs(z), p);
}

}  // namespace

double grid_power_mean(const TrigPolynomial& f, double p, const std::vector<std::size_t>& sizes) {
  check_exponent(p);
  if (!std::isfinite(p)) throw DomainError("grid_power_mean needs finite p");
  const std::size_t slices = grid_slice_count(sizes);
  std::vector<double> partial(slices, 0.0);
  for_each_grid_slice(f, sizes, [&](std::size_t slice, std::span<const Complex> values) {
    double sum = 0.0;
    for (const Complex& v : values) sum += abs_power(v, p);
    partial[slice] = sum;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  double points = 1.0;
  for (std::size_t g : sizes) points *= static_cast<double>(g);
  return std::pow(total / points, 1.0 / p);
}

SupEstimate sup_norm_estimate(const TrigPolynomial& f, const QuadratureSpec& quad) {
  quad.validate();
  SupEstimate out;
  const int d = f.dim();
  if (f.empty()) {
    out.point.assign(static_cast<std::size_t>(d), 0.0);
    return out;
  }
  for (int deg : f.max_degree()) out.grid.push_back(next_fft_size(4 * (2 * static_cast<std::size_t>(deg) + 1)));
  const auto& sizes = out.grid;

  constexpr std::size_t kCandidates = 8;
  struct Candidate {
    double value;
    std::size_t flat;
  };
  auto better = [](const Candidate& a, const Candidate& b) {
    return a.value != b.value ? a.value > b.value : a.flat < b.flat;
  };
  const std::size_t slices = grid_slice_count(sizes);
  std::size_t slice_len = 1;
  for (std::size_t g : sizes) slice_len *= g;
  slice_len /= slices;

  std::vector<std::vector<Candidate>> per_slice(slices);
  for_each_grid_slice(f, sizes, [&](std::size_t slice, std::span<const Complex> values) {
    std::vector<Candidate> top;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const Candidate c{std::abs(values[i]), slice * slice_len + i};
      if (top.size() < kCandidates || better(c, top.back())) {
        top.insert(std::upper_bound(top.begin(), top.end(), c, better), c);
        if (top.size() > kCandidates) top.pop_back();
      }
    }
    per_slice[slice] = std::move(top);
  });
  std::vector<Candidate> all;
  for (auto& top : per_slice) all.insert(all.end(), top.begin(), top.end());
  std::sort(all.begin(), all.end(), better);
  if (all.size() > kCandidates) all.resize(kCandidates);

  const auto du = static_cast<std::size_t>(d);
  auto point_of = [&](std::size_t flat) {
    std::vector<double> x(du);
    for (std::size_t j = du; j-- > 0;) {
      x[j] = kTwoPi * static_cast<double>(flat % sizes[j]) / static_cast<double>(sizes[j]);
      flat /= sizes[j];
    }
    return x;
  };

  out.value = all.front().value;
  out.point = point_of(all.front().flat);

  // Compass search from each candidate; steps start at half a grid cell.
  for (const Candidate& start : all) {
    std::vector<double> x = point_of(start.flat);
    double best = std::abs(f(x));
    std::vector<double> step(du);
    for (std::size_t j = 0; j < du; ++j) step[j] = 0.5 * kTwoPi / static_cast<double>(sizes[j]);
    // Stops once the step is a millionth of a grid cell.
    for (int halvings = 0, moves = 0; halvings < 20 && moves < 10000; ++moves) {
      bool moved = false;
      for (std::size_t j = 0; j < du && !moved; ++j) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> y = x;
          y[j] += sign * step[j];
          const double v = std::abs(f(y));
          if (v > best) {
            best = v;
            x = std::move(y);
            moved = true;
            break;
          }
        }
      }
      if (!moved) {
        for (double& h : step) h *= 0.5;
        ++halvings;
      }
    }
    if (best > out.value) {
      out.value = best;
      out.point = x;
    }
  }
  return out;
}

NormResult lp_norm_detailed(const TrigPolynomial& f, double p, const QuadratureSpec& quad) {
  quad.validate();
  check_exponent(p);
  NormResult out;
  if (f.empty()) {
    out.method = "empty";
    out.lower_estimate = std::isinf(p);
    return out;
  }

  if (std::isinf(p)) {
    SupEstimate sup = sup_norm_estimate(f, quad);
    out.value = sup.value;
    out.grid = std::move(sup.grid);
    out.method = "grid_max";
    out.lower_estimate = true;
    return out;
  }

  if (p == 2.0 && quad.mode == QuadratureMode::exact_parseval) {
    out.value = std::sqrt(f.l2_norm_squared());
    out.method = "parseval";
    return out;
  }

  if (is_even_integer(p) && quad.mode != QuadratureMode::adaptive_grid) {
    // |f|^p has degree p * deg_j per coordinate; a grid of p * deg_j + 1
    // points integrates it exactly.
    for (int deg : f.max_degree()) {
      out.grid.push_back(next_fft_size(static_cast<std::size_t>(p) * static_cast<std::size_t>(deg) + 1));
    }
    out.value = grid_power_mean(f, p, out.grid);
    out.method = "exact_grid";
    return out;
  }

  std::vector<std::size_t> sizes;
  for (int deg : f.max_degree()) {
    const std::size_t resolve = next_fft_size(2 * static_cast<std::size_t>(deg) + 1);
    if (resolve > quad.max_grid) {
      throw CapacityError(fmt::format("degree {} needs a grid above max_grid = {}", deg, quad.max_grid));
    }
    sizes.push_back(std::clamp(next_fft_size(2 * (2 * static_cast<std::size_t>(deg) + 1)), resolve, quad.max_grid));
  }
  double estimate = grid_power_mean(f, p, sizes);
  for (;;) {
    std::vector<std::size_t> finer;
    for (std::size_t g : sizes) finer.push_back(next_fft_size(2 * g));
    if (std::any_of(finer.begin(), finer.end(), [&](std::size_t g) { return g > quad.max_grid; })) {
      throw ToleranceError(fmt::format("L_{} quadrature did not reach rel_tol = {} within max_grid = {}", p,
                                       quad.rel_tol, quad.max_grid),
                           estimate);
    }
    const double refined = grid_power_mean(f, p, finer);
    sizes = std::move(finer);
    const bool converged = std::abs(refined - estimate) <= quad.rel_tol * std::abs(refined);
    estimate = refined;
    if (converged) break;
  }
  out.value = estimate;
  out.grid = std::move(sizes);
  out.method = "adaptive_grid";
  return out;
}

double lp_norm(const TrigPolynomial& f, double p, const QuadratureSpec& quad) {
  return lp_norm_detailed(f, p, quad).value;
}

NikolskiiResult nikolskii_check(const TrigPolynomial& t, double p, double q, const QuadratureSpec& quad,
                                double slack) {
  if (!(q >= 1.0) || !(q < p)) throw DomainError(fmt::format("Nikolskii check needs 1 <= q < p, got q = {}, p = {}", q, p));
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  double factor = std::exp2(static_cast<double>(t.dim()));
  for (int deg : t.max_degree()) factor *= std::pow(static_cast<double>(std::max(1, deg)), 1.0 / q - inv_p);
  NikolskiiResult out;
  out.lhs = lp_norm(t, p, quad);
  out.rhs = factor * lp_norm(t, q, quad);
  out.pass = out.lhs <= out.rhs * (1.0 + slack);
  return out;
}

}  // namespace hcross
