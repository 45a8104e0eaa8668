#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcross/besov.hpp"
#include "hcross/lp_norm.hpp"
#include "hcross/majorant.hpp"
#include "hcross/trig_polynomial.hpp"

namespace hcross {

enum class RegimeTag { T31, T32, T33 };

/// Which rate theorem covers (p, q, theta), with the order M^{-rho} (log M)^{lambda}.
struct RateRegime {
  double p = 2.0;
  double q = 2.0;
  double theta = 2.0;
  RegimeTag tag = RegimeTag::T31;
  double rho = 0.0;
  double lambda = 0.0;
};

const char* regime_name(RegimeTag tag);

/// q = inf -> T33 (needs r > 1/p); 1 <= q <= p with p >= 2 -> T31 (this
/// includes p = 2, where T31 and T32 agree); 1 <= q <= p <= 2 with
/// (p, q) != (1, 1) -> T32. theta must be finite and p < inf. Anything else
/// throws UnsupportedRegime.
RateRegime classify_regime(const MajorantParams& omega, double p, double q, double theta);

/// M^{-rho} (log2 M)^{lambda}; requires M >= 4.
double theoretical_rate(const RateRegime& regime, double M);

/// Restriction of f to Q(N), i.e. the sum of delta_s(f) over s in chi(N).
TrigPolynomial project_q(const TrigPolynomial& f, const MajorantParams& omega, double N);

/// ||f - project_q(f)||_q.
double approx_error(const TrigPolynomial& f, const MajorantParams& omega, double N, double q,
                    const QuadratureSpec& quad = {});

enum class Family { random_ball, shell, g3, g5, g7 };

const char* family_name(Family family);
/// Throws ConfigError for an unknown name.
Family parse_family(const std::string& name);

struct ExperimentRecord {
  double N = 0.0;
  double M = 0.0;
  double error = 0.0;
  double theory = 0.0;
  double ratio = 0.0;
};

struct RateExperiment {
  Family family = Family::shell;
  MajorantParams omega;
  BesovParams bp;
  double q = 2.0;
  std::vector<double> N_grid;
  int samples = 1;
  std::uint64_t seed = 0;
  QuadratureSpec quad;
  double c5 = 1.0;
  double c6 = 1.0;
  double c7 = 1.0;
};

/// The test function of `family` for grid point `n_index` and sample
/// `sample`. Random families are normalized to unit Besov norm; the g
/// witnesses are returned as constructed.
TrigPolynomial family_member(const RateExperiment& exp, std::size_t n_index, int sample);

/// Throws UnsupportedRegime when the family was not built for (p, q, theta).
RateRegime check_family_regime(const RateExperiment& exp);

/// One record per N: M = q_size(N), error = max over samples of
/// approx_error, theory = theoretical_rate(M).
std::vector<ExperimentRecord> rate_experiment(const RateExperiment& exp);

struct RateFit {
  double rho = 0.0;     // -coefficient of log2 M
  double lambda = 0.0;  // coefficient of log2 log2 M
  double intercept = 0.0;
  double residual_rms = 0.0;
  double condition = 0.0;
  bool collinear = false;  // condition number above 1e4
  double two_point_slope = 0.0;  // -d log2 error / d log2 M over the two largest M
};

/// Least squares of log2 error on (1, log2 M, log2 log2 M). Needs >= 5
/// records spanning >= 3 octaves of M.
RateFit fit_rate(std::span<const ExperimentRecord> records);

/// `points` values from n_min to n_max, equally spaced in log scale.
std::vector<double> geometric_grid(double n_min, double n_max, int points);

/// n_min, 2 n_min, 4 n_min, ... up to n_max.
std::vector<double> octave_grid(double n_min, double n_max);

}  // namespace hcross
