#include "hcross/besov.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hcross/errors.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/kernels.hpp"

namespace hcross {

void BesovParams::validate() const {
  if (!(p >= 1.0)) throw ConfigError(fmt::format("besov: p must be >= 1, got {}", p));
  if (!(theta >= 1.0)) throw ConfigError(fmt::format("besov: theta must be >= 1, got {}", theta));
}

void require_zero_free(const TrigPolynomial& f) {
  if (auto k = f.zero_coordinate_frequency()) {
    throw DomainError(fmt::format("frequency k = ({}) has a zero coordinate", fmt::join(*k, ",")));
  }
}

BandNorms block_band_norms(const TrigPolynomial& f, double p, const QuadratureSpec& quad) {
  require_zero_free(f);
  BandNorms out;
  for (const auto& [s, block] : split_blocks(f)) out.emplace_back(s, lp_norm(block, p, quad));
  return out;
}

BandNorms vp_band_norms(const TrigPolynomial& f, double p, const QuadratureSpec& quad) {
  require_zero_free(f);
  // A_s(f) can only be nonzero when s is within one step of an occupied block
  // in every coordinate.
  std::set<DyadicIndex> candidates;
  for (const auto& [s, block] : split_blocks(f)) {
    const auto d = s.size();
    DyadicIndex t(d);
    auto fill = [&](auto&& self, std::size_t j) -> void {
      if (j == d) {
        candidates.insert(t);
        return;
      }
      for (int delta = -1; delta <= 1; ++delta) {
        if (s[j] + delta < 1) continue;
        t[j] = s[j] + delta;
        self(self, j + 1);
      }
    };
    fill(fill, 0);
  }
  BandNorms out;
  for (const auto& s : candidates) {
    const TrigPolynomial band = a_apply(f, s);
    if (!band.empty()) out.emplace_back(s, lp_norm(band, p, quad));
  }
  return out;
}

double combine_band_norms(const BandNorms& bands, const MajorantParams& omega, double theta) {
  if (std::isinf(theta)) {
    double sup = 0.0;
    for (const auto& [s, n] : bands) sup = std::max(sup, n / omega_dyadic(omega, s));
    return sup;
  }
  // Scale by the largest term so theta-th powers stay in range.
  double largest = 0.0;
  for (const auto& [s, n] : bands) largest = std::max(largest, n / omega_dyadic(omega, s));
  if (largest == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& [s, n] : bands) sum += std::pow(n / omega_dyadic(omega, s) / largest, theta);
  return largest * std::pow(sum, 1.0 / theta);
}

double besov_norm_blocks(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                         const QuadratureSpec& quad) {
  omega.validate();
  bp.validate();
  if (f.dim() != omega.d) throw DomainError("besov_norm: polynomial and majorant dimensions differ");
  return combine_band_norms(block_band_norms(f, bp.p, quad), omega, bp.theta);
}

double besov_norm_vp(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                     const QuadratureSpec& quad) {
  omega.validate();
  bp.validate();
  if (f.dim() != omega.d) throw DomainError("besov_norm: polynomial and majorant dimensions differ");
  return combine_band_norms(vp_band_norms(f, bp.p, quad), omega, bp.theta);
}

double besov_norm(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                  const QuadratureSpec& quad) {
  const bool blocks_form = bp.p > 1.0 && std::isfinite(bp.p);
  return blocks_form ? besov_norm_blocks(f, omega, bp, quad) : besov_norm_vp(f, omega, bp, quad);
}

TrigPolynomial normalize_to_ball(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                                 const QuadratureSpec& quad) {
  if (f.empty()) throw DomainError("normalize_to_ball: f = 0 cannot be normalized");
  const double norm = besov_norm(f, omega, bp, quad);
  if (!(norm > 0.0)) throw DomainError("normalize_to_ball: f has zero norm");
  TrigPolynomial out = f;
  out *= Complex(1.0 / norm);
  return out;
}

}  // namespace hcross
