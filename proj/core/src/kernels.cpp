#include "hcross/kernels.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/index_sets.hpp"

namespace hcross {

namespace {

void check_order(int n, const char* what) {
  if (n < 1) throw DomainError(fmt::format("{}: order must be >= 1, got {}", what, n));
}

int checked_pow2(int e) {
  if (e < 0 || e > 29) throw CapacityError(fmt::format("2^{} is outside the supported frequency range", e));
  return 1 << e;
}

}  // namespace

double vallee_poussin_coefficient(int n, int k) {
  check_order(n, "vallee_poussin");
  const long long a = std::llabs(k);
  if (a <= n) return 1.0;
  if (a < 2LL * n) return static_cast<double>(2LL * n - a) / n;
  return 0.0;
}

double fejer_coefficient(int n, int k) {
  check_order(n, "fejer");
  const long long a = std::llabs(k);
  if (a > n) return 0.0;
  return static_cast<double>(n + 1 - a) / (n + 1);
}

TrigPolynomial vallee_poussin(int n) {
  check_order(n, "vallee_poussin");
  std::vector<std::pair<Frequency, Complex>> terms;
  for (int k = -(2 * n - 1); k <= 2 * n - 1; ++k) terms.push_back({{k}, vallee_poussin_coefficient(n, k)});
  return TrigPolynomial::from_terms(1, std::move(terms));
}

TrigPolynomial fejer(int n) {
  check_order(n, "fejer");
  std::vector<std::pair<Frequency, Complex>> terms;
  for (int k = -n; k <= n; ++k) terms.push_back({{k}, fejer_coefficient(n, k)});
  return TrigPolynomial::from_terms(1, std::move(terms));
}

double a_band_factor(int s, int k) {
  if (s < 1) throw DomainError(fmt::format("a_band_factor: s must be >= 1, got {}", s));
  if (s == 1) return vallee_poussin_coefficient(2, k);
  return vallee_poussin_coefficient(checked_pow2(s), k) - vallee_poussin_coefficient(checked_pow2(s - 1), k);
}

double a_band_multiplier(const DyadicIndex& s, std::span<const int> k) {
  validate_dyadic(s);
  if (k.size() != s.size()) throw DomainError("a_band_multiplier: dimension mismatch");
  double m = 1.0;
  for (std::size_t j = 0; j < s.size() && m != 0.0; ++j) m *= a_band_factor(s[j], k[j]);
  return m;
}

TrigPolynomial a_band_kernel(const DyadicIndex& s) {
  validate_dyadic(s);
  const auto d = s.size();
  // Per-coordinate support is |k| < 2^{s_j + 1}.
  std::vector<std::vector<std::pair<int, double>>> axes(d);
  for (std::size_t j = 0; j < d; ++j) {
    const int reach = checked_pow2(s[j] + 1);
    for (int k = -reach; k <= reach; ++k) {
      const double v = a_band_factor(s[j], k);
      if (v != 0.0) axes[j].emplace_back(k, v);
    }
  }
  std::vector<std::pair<Frequency, Complex>> terms;
  Frequency k(d);
  auto fill = [&](auto&& self, std::size_t j, double value) -> void {
    if (j == d) {
      terms.emplace_back(k, value);
      return;
    }
    for (const auto& [kj, v] : axes[j]) {
      k[j] = kj;
      self(self, j + 1, value * v);
    }
  };
  fill(fill, 0, 1.0);
  return TrigPolynomial::from_terms(static_cast<int>(d), std::move(terms));
}

TrigPolynomial a_apply(const TrigPolynomial& f, const DyadicIndex& s) {
  validate_dyadic(s);
  if (static_cast<int>(s.size()) != f.dim()) throw DomainError("a_apply: dimension mismatch");
  return f.multiply([&](std::span<const int> k) { return Complex(a_band_multiplier(s, k)); });
}

TrigPolynomial k_packet(const DyadicIndex& s, std::span<const double> center, std::optional<int> u_override) {
  validate_dyadic(s);
  const auto d = s.size();
  if (!center.empty() && center.size() != d) throw DomainError("k_packet: center has the wrong dimension");
  std::vector<int> u(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (u_override) {
      u[j] = *u_override;
    } else if (s[j] < 2) {
      throw DomainError(fmt::format("k_packet: s = ({}) needs every s_j >= 2 for K_{{2^(s_j-2)}}", fmt::join(s, ",")));
    } else {
      u[j] = checked_pow2(s[j] - 2);
    }
    if (u[j] < 1) throw DomainError("k_packet: Fejer order must be >= 1");
  }
  const Frequency ks = ks_vector(s);
  for (std::size_t j = 0; j < d; ++j) {
    if (ks[j] - u[j] <= 0) {
      throw DomainError(fmt::format("k_packet: packet around k^s = ({}) with u = {} reaches a zero frequency",
                                    fmt::join(ks, ","), u[j]));
    }
  }

  std::vector<std::pair<Frequency, Complex>> terms;
  Frequency k(d);
  auto fill = [&](auto&& self, std::size_t j, Complex value) -> void {
    if (j == d) {
      terms.emplace_back(k, value);
      return;
    }
    for (int m = -u[j]; m <= u[j]; ++m) {
      k[j] = ks[j] + m;
      Complex factor = fejer_coefficient(u[j], m);
      if (!center.empty() && m != 0) factor *= std::polar(1.0, -m * center[j]);
      self(self, j + 1, value * factor);
    }
  };
  fill(fill, 0, Complex(1.0));
  return TrigPolynomial::from_terms(static_cast<int>(d), std::move(terms));
}

}  // namespace hcross
