#include "hcross/fft_grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdint>
#include <mutex>

#include <fmt/format.h>

#include "hcross/errors.hpp"
#include "hcross/parallel.hpp"

namespace hcross {

std::size_t next_fft_size(std::size_t n) {
  for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
    std::size_t rest = m;
    for (std::size_t f : {2, 3, 5}) {
      while (rest % f == 0) rest /= f;
    }
    if (rest == 1) return m;
  }
}

std::size_t grid_slice_count(std::span<const std::size_t> sizes) {
  return sizes.size() == 1 ? 1 : sizes[0];
}

namespace {

// The FFTW planner is not thread-safe; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class BackwardPlan {
 public:
  BackwardPlan(std::span<const std::size_t> dims, std::size_t len) {
    std::vector<int> n(dims.begin(), dims.end());
    std::vector<Complex> scratch(len);
    auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft(static_cast<int>(n.size()), n.data(), data, data, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan_ == nullptr) throw CapacityError("FFTW could not create a plan for this grid");
  }
  ~BackwardPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardPlan(const BackwardPlan&) = delete;
  BackwardPlan& operator=(const BackwardPlan&) = delete;

  void run(std::vector<Complex>& buffer) const {
    auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
    fftw_execute_dft(plan_, data, data);
  }

 private:
  fftw_plan plan_ = nullptr;
};

std::vector<Complex> twiddles(std::size_t g) {
  std::vector<Complex> t(g);
  for (std::size_t m = 0; m < g; ++m) {
    t[m] = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(g));
  }
  return t;
}

std::size_t fold(int k, std::size_t g) {
  const auto gi = static_cast<long long>(g);
  long long m = k % gi;
  if (m < 0) m += gi;
  return static_cast<std::size_t>(m);
}

}  // namespace

void for_each_grid_slice(const TrigPolynomial& f, std::span<const std::size_t> sizes,
                         const std::function<void(std::size_t, std::span<const Complex>)>& visit,
                         GridPath path) {
  const int d = f.dim();
  if (static_cast<int>(sizes.size()) != d) throw DomainError("grid has the wrong number of axes");
  for (std::size_t g : sizes) {
    if (g < 1) throw DomainError("grid sizes must be >= 1");
  }
  const auto du = static_cast<std::size_t>(d);
  const std::size_t slices = grid_slice_count(sizes);
  std::size_t slice_len = 1;
  for (std::size_t j = (d == 1 ? 0 : 1); j < du; ++j) slice_len *= sizes[j];
  if (slice_len > kMaxSliceValues) {
    throw CapacityError(fmt::format("grid slice of {} values exceeds the cap of {}", slice_len, kMaxSliceValues));
  }

  const std::size_t terms = f.size();
  std::vector<std::vector<Complex>> tw(du);
  for (std::size_t j = 0; j < du; ++j) tw[j] = twiddles(sizes[j]);
  std::vector<std::size_t> folded(terms * du);
  for (std::size_t t = 0; t < terms; ++t) {
    auto k = f.frequency(t);
    for (std::size_t j = 0; j < du; ++j) folded[t * du + j] = fold(k[j], sizes[j]);
  }

  const double work = static_cast<double>(terms) * static_cast<double>(slices) * static_cast<double>(slice_len);
  const bool direct = path == GridPath::direct || (path == GridPath::automatic && work < kDirectSumCrossover);
  if (direct) {
    // Term by term; twiddle indices advance by the folded frequency, so no
    // modular products are needed in the inner loop.
    const std::size_t first = d == 1 ? 0 : 1;
    parallel_for(slices, [&](std::size_t slice) {
      std::vector<Complex> values(slice_len, Complex(0.0));
      for (std::size_t t = 0; t < terms; ++t) {
        Complex base = f.coefficient(t);
        if (d > 1) base *= tw[0][(folded[t * du] * slice) % sizes[0]];
        std::size_t p = 0;
        auto walk = [&](auto&& self, std::size_t j, Complex acc) -> void {
          const std::size_t g = sizes[j];
          const std::size_t step = folded[t * du + j];
          std::size_t pos = 0;
          for (std::size_t i = 0; i < g; ++i) {
            const Complex v = acc * tw[j][pos];
            if (j + 1 == du) {
              values[p++] += v;
            } else {
              self(self, j + 1, v);
            }
            pos += step;
            if (pos >= g) pos -= g;
          }
        };
        walk(walk, first, base);
      }
      visit(slice, values);
    });
    return;
  }

  if (d == 1) {
    const BackwardPlan plan(sizes, slice_len);
    std::vector<Complex> buffer(slice_len, Complex(0.0));
    for (std::size_t t = 0; t < terms; ++t) buffer[folded[t]] += f.coefficient(t);
    plan.run(buffer);
    visit(0, buffer);
    return;
  }

  const BackwardPlan plan(sizes.subspan(1), slice_len);
  std::vector<std::size_t> offset(terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::size_t flat = 0;
    for (std::size_t j = 1; j < du; ++j) flat = flat * sizes[j] + folded[t * du + j];
    offset[t] = flat;
  }
  const std::size_t g0 = sizes[0];
  parallel_for(slices, [&](std::size_t slice) {
    std::vector<Complex> buffer(slice_len, Complex(0.0));
    for (std::size_t t = 0; t < terms; ++t) {
      buffer[offset[t]] += f.coefficient(t) * tw[0][(folded[t * du] * slice) % g0];
    }
    plan.run(buffer);
    visit(slice, buffer);
  });
}

std::vector<Complex> evaluate_grid(const TrigPolynomial& f, std::span<const std::size_t> sizes, GridPath path) {
  std::size_t total = 1;
  for (std::size_t g : sizes) {
    total *= g;
    if (total > kMaxSliceValues) {
      throw CapacityError(fmt::format("full grid exceeds the cap of {} values", kMaxSliceValues));
    }
  }
  std::vector<Complex> out(total);
  const std::size_t slices = grid_slice_count(sizes);
  const std::size_t slice_len = total / slices;
  for_each_grid_slice(f, sizes, [&](std::size_t slice, std::span<const Complex> values) {
    std::copy(values.begin(), values.end(), out.begin() + static_cast<std::ptrdiff_t>(slice * slice_len));
  }, path);
  return out;
}

}  // namespace hcross
