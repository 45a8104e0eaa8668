#include "hcross/random_poly.hpp"

#include <cmath>
#include <vector>

#include "hcross/errors.hpp"

namespace hcross {

std::mt19937_64 make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
  std::vector<std::uint32_t> words;
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (std::uint64_t i : indices) push(i);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

Complex draw_coefficient(std::mt19937_64& rng, CoefficientLaw law) {
  if (law == CoefficientLaw::unit_complex) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    return std::polar(1.0, phase(rng));
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return Complex(re, im) / std::sqrt(2.0);
}

TrigPolynomial random_in_spectrum(const SpectrumSet& set, std::mt19937_64& rng, CoefficientLaw law) {
  const std::vector<Frequency> freqs = set.materialize();
  if (freqs.empty()) throw DomainError("random_in_spectrum: empty spectrum set");
  std::vector<std::pair<Frequency, Complex>> terms;
  terms.reserve(freqs.size());
  for (const auto& k : freqs) {
    Complex c = draw_coefficient(rng, law);
    // A Gaussian draw of exactly zero would silently shrink the spectrum.
    while (c == Complex(0.0)) c = draw_coefficient(rng, law);
    terms.emplace_back(k, c);
  }
  return TrigPolynomial::from_terms(set.dim(), std::move(terms));
}

TrigPolynomial random_in_spectrum(const SpectrumSet& set, std::uint64_t seed, CoefficientLaw law) {
  auto rng = make_stream(seed, {});
  return random_in_spectrum(set, rng, law);
}

}  // namespace hcross
