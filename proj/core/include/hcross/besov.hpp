#pragma once

#include <utility>
#include <vector>

#include "hcross/lp_norm.hpp"
#include "hcross/majorant.hpp"
#include "hcross/trig_polynomial.hpp"

namespace hcross {

struct BesovParams {
  double p = 2.0;      // in [1, inf]
  double theta = 2.0;  // in [1, inf]

  /// Throws ConfigError unless p >= 1 and theta >= 1 (infinity allowed).
  void validate() const;
};

/// Throws DomainError naming the first frequency with a zero coordinate.
void require_zero_free(const TrigPolynomial& f);

/// ||delta_s(f)||_p or ||A_s(f)||_p for each nonempty band, ordered by s.
using BandNorms = std::vector<std::pair<DyadicIndex, double>>;

BandNorms block_band_norms(const TrigPolynomial& f, double p, const QuadratureSpec& quad = {});
BandNorms vp_band_norms(const TrigPolynomial& f, double p, const QuadratureSpec& quad = {});

/// (sum_s (Omega^{-1}(2^{-s}) n_s)^theta)^{1/theta}, or the sup for theta = inf,
/// summed in the order of `bands`.
double combine_band_norms(const BandNorms& bands, const MajorantParams& omega, double theta);

/// Block form: bands are the dyadic blocks delta_s(f).
double besov_norm_blocks(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                         const QuadratureSpec& quad = {});

/// Vallee Poussin form: bands are A_s(f), over every s adjacent (in each
/// coordinate, up to one step) to an occupied block of f.
double besov_norm_vp(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                     const QuadratureSpec& quad = {});

/// Block form for 1 < p < inf, Vallee Poussin form for p in {1, inf}.
double besov_norm(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                  const QuadratureSpec& quad = {});

/// f / besov_norm(f). Throws DomainError for f = 0.
TrigPolynomial normalize_to_ball(const TrigPolynomial& f, const MajorantParams& omega, const BesovParams& bp,
                                 const QuadratureSpec& quad = {});

}  // namespace hcross
