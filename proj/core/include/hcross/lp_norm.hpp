#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcross/trig_polynomial.hpp"

namespace hcross {

/// How exact an L_p norm must be. Each mode names the most exact method the
/// computation may use:
///   exact_parseval   - Parseval at p = 2, exact grid for other even p,
///                      adaptive grid otherwise (default);
///   even_power_exact - exact grid for every even p, including p = 2;
///   adaptive_grid    - doubling quadrature for every finite p.
/// p = infinity always uses the refined grid maximum.
enum class QuadratureMode { exact_parseval, even_power_exact, adaptive_grid };

struct QuadratureSpec {
  QuadratureMode mode = QuadratureMode::exact_parseval;
  double rel_tol = 1e-6;
  std::size_t max_grid = std::size_t{1} << 15;  // per dimension, power of two

  /// Throws ConfigError unless rel_tol > 0 and max_grid is a power of two.
  void validate() const;
};

struct NormResult {
  double value = 0.0;
  std::vector<std::size_t> grid;  // empty for Parseval
  std::string method;             // "parseval", "exact_grid", "adaptive_grid", "grid_max"
  bool lower_estimate = false;    // true for p = infinity
};

/// ||f||_p = ((2 pi)^{-d} int |f|^p)^{1/p}, p in [1, inf]. Adaptive
/// quadrature that reaches max_grid before converging throws ToleranceError
/// carrying the last estimate.
NormResult lp_norm_detailed(const TrigPolynomial& f, double p, const QuadratureSpec& quad = {});
double lp_norm(const TrigPolynomial& f, double p, const QuadratureSpec& quad = {});

/// (mean over the grid of |f|^p)^{1/p} for finite p >= 1.
double grid_power_mean(const TrigPolynomial& f, double p, const std::vector<std::size_t>& sizes);

/// Largest |f| found on the grid, refined by local search around the best
/// grid points. A lower estimate of ||f||_inf.
struct SupEstimate {
  double value = 0.0;
  std::vector<double> point;
  std::vector<std::size_t> grid;
};
SupEstimate sup_norm_estimate(const TrigPolynomial& f, const QuadratureSpec& quad = {});

struct NikolskiiResult {
  double lhs = 0.0;  // ||t||_p
  double rhs = 0.0;  // 2^d prod n_j^{1/q - 1/p} ||t||_q
  bool pass = false;
};

/// Checks ||t||_p <= 2^d prod n_j^{1/q-1/p} ||t||_q with n_j = max(1, deg_j t).
/// Requires 1 <= q < p <= inf.
NikolskiiResult nikolskii_check(const TrigPolynomial& t, double p, double q, const QuadratureSpec& quad = {},
                                double slack = 1e-9);

}  // namespace hcross
