#pragma once

#include <span>
#include <string>
#include <vector>

namespace hcross {

/// Parameters of the power-logarithmic majorant
///
///   Omega(t) = prod_j t_j^r / max{1, log2(1/t_j)}^{b_j}   (all t_j > 0),
///   Omega(t) = 0                                          (some t_j = 0),
///
/// of a mixed modulus of continuity of order l. Logarithms are base 2.
struct MajorantParams {
  int d = 1;
  double r = 1.0;
  std::vector<double> b{0.0};
  int l = 2;

  /// Throws ConfigError unless d >= 1, b has d entries, 0 < r < l and b_j < r.
  void validate() const;

  /// r * s + b_j * log2(s): the per-coordinate part of -log2 Omega(2^{-s}).
  double coordinate_log_weight(int j, int s) const;

  /// -log2 Omega(2^{-s}) = sum_j (r s_j + b_j log2 s_j), accumulated in
  /// coordinate order. Every set-membership test in the library goes
  /// through this sum so that chi, Theta and Q(N) agree bit for bit.
  double log_weight(std::span<const int> s) const;

  static MajorantParams isotropic(int d, double r, double b, int l);
};

/// Omega(t). Requires t_j >= 0; throws DomainError otherwise.
double omega_eval(const MajorantParams& params, std::span<const double> t);

/// Omega(2^{-s}) = prod_j 2^{-r s_j} s_j^{-b_j}; requires s_j >= 1.
double omega_dyadic(const MajorantParams& params, std::span<const int> s);

struct AxiomViolation {
  std::string condition;  // "positivity", "monotone", "scaling", "S", "S_l"
  int coordinate = -1;    // -1 for conditions probed on all coordinates at once
  double tau1 = 0.0;
  double tau2 = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct MajorantAudit {
  bool positivity = true;
  bool monotone = true;
  bool scaling = true;
  bool s_condition = true;
  bool sl_condition = true;
  /// Best constants found on the probe grid: C1 = max ratio for (S),
  /// C2 = min ratio for (S_l) (largest admissible constant).
  double c1 = 1.0;
  double c2 = 1.0;
  std::vector<AxiomViolation> violations;

  bool all_pass() const {
    return positivity && monotone && scaling && s_condition && sl_condition;
  }
};

/// Numerical audit of conditions 1-3 and the Bari-Stechkin conditions (S)
/// with exponent alpha and (S_l) with exponent gamma, on the dyadic grid
/// tau = 2^{-m}, m = 0..probe_depth, one coordinate at a time with the
/// others held at dyadic values. (S)/(S_l) are flagged when the best
/// constant keeps growing between half depth and full depth. Violations
/// are report content, never exceptions.
MajorantAudit verify_majorant_axioms(const MajorantParams& params, double alpha, double gamma,
                                     int probe_depth);

}  // namespace hcross
