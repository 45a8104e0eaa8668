#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hcross/trig_polynomial.hpp"

namespace hcross {

/// Smallest 2^a 3^b 5^c that is >= n (n >= 1).
std::size_t next_fft_size(std::size_t n);

/// Largest number of complex values a single grid slice may hold.
inline constexpr std::size_t kMaxSliceValues = std::size_t{1} << 26;

/// Below this many |spectrum| * |points| operations the grid is filled by
/// direct summation instead of FFTs.
inline constexpr double kDirectSumCrossover = 32768.0;  // 2^15

enum class GridPath { automatic, direct, fft };

/// Evaluates f on the uniform grid x_j = 2 pi i_j / G_j, i_j in [0, G_j).
///
/// The grid is produced in slices: for d >= 2, slice i holds all points with
/// i_0 = i in row-major order over the remaining axes; for d = 1 a single
/// slice holds the whole grid. `visit(i, values)` may run concurrently for
/// distinct slices, so it must only touch per-slice state. Slice values do
/// not depend on the number of threads.
void for_each_grid_slice(const TrigPolynomial& f, std::span<const std::size_t> sizes,
                         const std::function<void(std::size_t, std::span<const Complex>)>& visit,
                         GridPath path = GridPath::automatic);

/// Number of slices for_each_grid_slice produces on this grid.
std::size_t grid_slice_count(std::span<const std::size_t> sizes);

/// Whole grid, row-major. Throws CapacityError above kMaxSliceValues.
std::vector<Complex> evaluate_grid(const TrigPolynomial& f, std::span<const std::size_t> sizes,
                                   GridPath path = GridPath::automatic);

}  // namespace hcross
