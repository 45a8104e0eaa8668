#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "hcross/index_sets.hpp"
#include "hcross/trig_polynomial.hpp"

namespace hcross {

enum class CoefficientLaw {
  unit_complex,  // e^{i phi}, phi uniform on [0, 2 pi)
  gaussian,      // (X + iY) / sqrt(2), X, Y standard normal
};

/// Independent stream for a (seed, index...) tuple, seeded through seed_seq
/// so that nearby tuples give unrelated streams.
std::mt19937_64 make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> indices);

Complex draw_coefficient(std::mt19937_64& rng, CoefficientLaw law);

/// i.i.d. coefficients over the frequencies of `set`, drawn in lexicographic
/// order. Throws DomainError for an empty set.
TrigPolynomial random_in_spectrum(const SpectrumSet& set, std::mt19937_64& rng,
                                  CoefficientLaw law = CoefficientLaw::unit_complex);
TrigPolynomial random_in_spectrum(const SpectrumSet& set, std::uint64_t seed,
                                  CoefficientLaw law = CoefficientLaw::unit_complex);

}  // namespace hcross
