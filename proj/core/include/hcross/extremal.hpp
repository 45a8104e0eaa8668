#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcross/besov.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/majorant.hpp"
#include "hcross/trig_polynomial.hpp"

namespace hcross {

struct WitnessConfig {
  MajorantParams omega;
  BesovParams bp;
  double N = 1024.0;
  double c5 = 1.0;
  double c6 = 1.0;
  double c7 = 1.0;
  std::uint64_t seed = 0;
};

/// k^s: k_j = 2^{s_j-1} + 2^{s_j-2} for s_j >= 2, k_j = 1 for s_j = 1.
/// Always lies in rho(s).
Frequency ks_vector(const DyadicIndex& s);

/// N^{-1} e^{i(k0, x)}; by default k0 = k^s for the smallest s in Theta(N).
TrigPolynomial g1(const WitnessConfig& cfg, std::optional<Frequency> k0 = std::nullopt);

/// sum over Theta'(N) of e^{i(k^s, x)}.
TrigPolynomial g2(const WitnessConfig& cfg);

/// C5 N^{-1} (log N)^{-(d-1)/theta} g2.
TrigPolynomial g3(const WitnessConfig& cfg);

/// Packet layout shared by g4 and g5. For d = 1 the layout is a single
/// packet with u = v = 1.
struct PacketLayout {
  std::size_t theta_prime_size = 0;
  int u = 1;  // 2^{floor(log2 |Theta'| / d)}
  int v = 1;  // floor(|Theta'|^{1/d})
  std::vector<DyadicIndex> members;          // first v^d members of Theta'(N)
  std::vector<std::vector<double>> centers;  // centers of the matching cubes of edge 2 pi / v
};

/// Throws DomainError when Theta'(N) is empty or u >= 2^{min_j s_j - 1} for
/// a selected s.
PacketLayout packet_layout(const WitnessConfig& cfg);

/// sum over the layout of e^{i(k^s, x)} prod_j K_u(x_j - x^s_j).
TrigPolynomial g4(const WitnessConfig& cfg);

/// C6 N^{-1} (log N)^{(d-1)(1/p - 1 - 1/theta)} g4.
TrigPolynomial g5(const WitnessConfig& cfg);

/// sum over Theta'(N) of the unshifted packets K^s. Needs every s_j >= 2.
TrigPolynomial g6(const WitnessConfig& cfg);

/// g6(0) = sum over Theta'(N) of prod_j (2^{s_j-2} + 1), in closed form.
double g6_peak(const WitnessConfig& cfg);

/// Scale turning g6 into g7:
/// C7 N^{-1} (N^{1/r} (log N)^{-sum b_j / r})^{1/p - 1} (log N)^{-(d-1)/theta}.
double g7_scale(const WitnessConfig& cfg);

TrigPolynomial g7(const WitnessConfig& cfg);

}  // namespace hcross
