#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcross/trig_polynomial.hpp"

namespace hcross {

// Text format:
//
//   # optional comment lines
//   d=2
//   k_1 k_2 re im
//   ...
//
// Coefficients are written with 17 significant digits so files round-trip.

void write_polynomial(std::ostream& out, const TrigPolynomial& f, const std::vector<std::string>& comments = {});

/// Throws ConfigError naming the line on malformed input. Frequencies with a
/// zero coordinate are accepted here; operations that forbid them reject
/// them later.
TrigPolynomial read_polynomial(std::istream& in);

TrigPolynomial read_polynomial_file(const std::string& path);
void write_polynomial_file(const std::string& path, const TrigPolynomial& f,
                           const std::vector<std::string>& comments = {});

}  // namespace hcross
