#include "hcross/extremal.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hcross/errors.hpp"
#include "hcross/kernels.hpp"

namespace hcross {

namespace {

double inverse(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

IndexFamily nonempty_theta_prime(const WitnessConfig& cfg) {
  IndexFamily family = theta_prime(cfg.omega, cfg.N);
  if (family.empty()) {
    throw DomainError(fmt::format("Theta'(N) is empty for N = {}; increase N", cfg.N));
  }
  return family;
}

}  // namespace

Frequency ks_vector(const DyadicIndex& s) {
  validate_dyadic(s);
  Frequency k(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] > 30) throw CapacityError(fmt::format("ks_vector: s_j = {} is too large", s[j]));
    k[j] = s[j] >= 2 ? (1 << (s[j] - 1)) + (1 << (s[j] - 2)) : 1;
  }
  return k;
}

TrigPolynomial g1(const WitnessConfig& cfg, std::optional<Frequency> k0) {
  if (!k0) {
    const IndexFamily band = theta(cfg.omega, cfg.N);
    if (band.empty()) throw DomainError(fmt::format("Theta(N) is empty for N = {}", cfg.N));
    k0 = ks_vector(band.members.front());
  }
  return TrigPolynomial::monomial(*k0, 1.0 / cfg.N);
}

TrigPolynomial g2(const WitnessConfig& cfg) {
  std::vector<std::pair<Frequency, Complex>> terms;
  for (const auto& s : nonempty_theta_prime(cfg).members) terms.emplace_back(ks_vector(s), 1.0);
  return TrigPolynomial::from_terms(cfg.omega.d, std::move(terms));
}

TrigPolynomial g3(const WitnessConfig& cfg) {
  const double log_n = std::log2(cfg.N);
  const double scale = cfg.c5 / cfg.N * std::pow(log_n, -(cfg.omega.d - 1) * inverse(cfg.bp.theta));
  TrigPolynomial out = g2(cfg);
  out *= Complex(scale);
  return out;
}

PacketLayout packet_layout(const WitnessConfig& cfg) {
  const IndexFamily family = nonempty_theta_prime(cfg);
  const int d = cfg.omega.d;
  const std::size_t n = family.size();

  auto ipow = [](std::size_t base, int e) {
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  };
  PacketLayout layout;
  layout.theta_prime_size = n;
  // d = 1 is the degenerate case: one K_1 packet, whatever |Theta'| is.
  int e = 0;
  std::size_t v = 1;
  if (d > 1) {
    while (ipow(2, (e + 1) * d) <= n) ++e;
    while (ipow(v + 1, d) <= n) ++v;
  }
  layout.u = 1 << e;
  layout.v = static_cast<int>(v);

  const std::size_t cubes = ipow(v, d);
  for (std::size_t idx = 0; idx < cubes; ++idx) {
    const DyadicIndex& s = family.members[idx];
    const int smin = *std::min_element(s.begin(), s.end());
    if (smin > 30 || layout.u >= (1 << (smin - 1))) {
      throw DomainError(fmt::format("packet width u = {} does not fit block s = ({}); increase N", layout.u,
                                    fmt::join(s, ",")));
    }
    std::vector<double> center(static_cast<std::size_t>(d));
    std::size_t rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      const std::size_t cell = rest % v;
      rest /= v;
      center[static_cast<std::size_t>(j)] = (static_cast<double>(cell) + 0.5) * kTwoPi / static_cast<double>(v);
    }
    layout.members.push_back(s);
    layout.centers.push_back(std::move(center));
  }
  return layout;
}

TrigPolynomial g4(const WitnessConfig& cfg) {
  const PacketLayout layout = packet_layout(cfg);
  TrigPolynomial out(cfg.omega.d);
  for (std::size_t i = 0; i < layout.members.size(); ++i) {
    out += k_packet(layout.members[i], layout.centers[i], layout.u);
  }
  return out;
}

TrigPolynomial g5(const WitnessConfig& cfg) {
  const double log_n = std::log2(cfg.N);
  const double exponent = (cfg.omega.d - 1) * (inverse(cfg.bp.p) - 1.0 - inverse(cfg.bp.theta));
  TrigPolynomial out = g4(cfg);
  out *= Complex(cfg.c6 / cfg.N * std::pow(log_n, exponent));
  return out;
}

namespace {

std::vector<DyadicIndex> packet_members(const WitnessConfig& cfg) {
  IndexFamily family = nonempty_theta_prime(cfg);
  for (const auto& s : family.members) {
    if (*std::min_element(s.begin(), s.end()) < 2) {
      throw DomainError(fmt::format("Theta'(N) contains s = ({}) with a coordinate 1; increase N",
                                    fmt::join(s, ",")));
    }
  }
  return std::move(family.members);
}

}  // namespace

TrigPolynomial g6(const WitnessConfig& cfg) {
  TrigPolynomial out(cfg.omega.d);
  for (const auto& s : packet_members(cfg)) out += k_packet(s);
  return out;
}

double g6_peak(const WitnessConfig& cfg) {
  double total = 0.0;
  for (const auto& s : packet_members(cfg)) {
    double term = 1.0;
    for (int sj : s) term *= std::exp2(sj - 2) + 1.0;
    total += term;
  }
  return total;
}

double g7_scale(const WitnessConfig& cfg) {
  const auto& om = cfg.omega;
  const double log_n = std::log2(cfg.N);
  double sum_b = 0.0;
  for (double bj : om.b) sum_b += bj;
  const double size = std::pow(cfg.N, 1.0 / om.r) * std::pow(log_n, -sum_b / om.r);
  return cfg.c7 / cfg.N * std::pow(size, inverse(cfg.bp.p) - 1.0) *
         std::pow(log_n, -(om.d - 1) * inverse(cfg.bp.theta));
}

TrigPolynomial g7(const WitnessConfig& cfg) {
  TrigPolynomial out = g6(cfg);
  out *= Complex(g7_scale(cfg));
  return out;
}

}  // namespace hcross
