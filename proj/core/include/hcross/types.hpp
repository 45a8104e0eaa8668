#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace hcross {

using Complex = std::complex<double>;

/// Dyadic block index s = (s_1, ..., s_d) with every s_j >= 1.
using DyadicIndex = std::vector<int>;

/// Integer frequency vector k of a trigonometric monomial e^{i(k,x)}.
using Frequency = std::vector<int>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace hcross
