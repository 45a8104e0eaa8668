#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hcross/trig_polynomial.hpp"

namespace hcross {

/// V^_n(k): 1 for |k| <= n, (2n - |k|) / n for n < |k| < 2n, 0 beyond.
double vallee_poussin_coefficient(int n, int k);

/// K^_n(k) = 1 - |k| / (n + 1) for |k| <= n, 0 beyond.
double fejer_coefficient(int n, int k);

/// One-dimensional kernels V_n and K_n (n >= 1).
TrigPolynomial vallee_poussin(int n);
TrigPolynomial fejer(int n);

/// Per-coordinate factor of the band filter A_s: V^_2(k) for s = 1 and
/// V^_{2^s}(k) - V^_{2^{s-1}}(k) for s >= 2. Using V_2 alone at s = 1 keeps
/// |k| = 1 covered, so the factors sum to one over all s.
double a_band_factor(int s, int k);

/// prod_j a_band_factor(s_j, k_j).
double a_band_multiplier(const DyadicIndex& s, std::span<const int> k);

/// The kernel A_s itself, as a d-dimensional polynomial.
TrigPolynomial a_band_kernel(const DyadicIndex& s);

/// A_s(f) = f * A_s: coefficients multiplied by a_band_multiplier.
TrigPolynomial a_apply(const TrigPolynomial& f, const DyadicIndex& s);

/// Fejer packet e^{i(k^s, x)} prod_j K_{u_j}(x_j - c_j) around k^s = ks_vector(s).
/// Without an override u_j = 2^{s_j - 2}, which needs every s_j >= 2. Throws
/// DomainError if a packet frequency would have a zero coordinate.
TrigPolynomial k_packet(const DyadicIndex& s, std::span<const double> center = {},
                        std::optional<int> u_override = std::nullopt);

}  // namespace hcross
