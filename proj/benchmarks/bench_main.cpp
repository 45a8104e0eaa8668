#include <vector>

#include <benchmark/benchmark.h>

#include "hcross/besov.hpp"
#include "hcross/fft_grid.hpp"
#include "hcross/index_sets.hpp"
#include "hcross/lp_norm.hpp"
#include "hcross/random_poly.hpp"

using namespace hcross;

namespace {

MajorantParams omega2() { return MajorantParams::isotropic(2, 1.5, 0.0, 2); }

TrigPolynomial q_poly(double N) { return random_in_spectrum(q_set(omega2(), N), 1); }

void BM_GridFill(benchmark::State& state, GridPath path) {
  const auto f = q_poly(static_cast<double>(state.range(0)));
  const auto deg = f.max_degree();
  const std::vector<std::size_t> sizes{next_fft_size(4 * deg[0] + 2), next_fft_size(4 * deg[1] + 2)};
  for (auto _ : state) {
    double acc = 0.0;
    for_each_grid_slice(
        f, sizes, [&](std::size_t, std::span<const Complex> v) { acc += std::abs(v[0]); }, path);
    benchmark::DoNotOptimize(acc);
  }
  state.counters["terms"] = static_cast<double>(f.size());
  state.counters["points"] = static_cast<double>(sizes[0] * sizes[1]);
}

void BM_GridDirect(benchmark::State& state) { BM_GridFill(state, GridPath::direct); }
void BM_GridFft(benchmark::State& state) { BM_GridFill(state, GridPath::fft); }

void BM_QSize(benchmark::State& state) {
  const auto omega = MajorantParams::isotropic(3, 1.0, 0.0, 2);
  const double N = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_size(omega, N));
}

void BM_LpNorm(benchmark::State& state) {
  const auto f = q_poly(static_cast<double>(state.range(0)));
  const double p = static_cast<double>(state.range(1)) / 2.0;
  QuadratureSpec quad;
  quad.rel_tol = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, p, quad));
  state.counters["terms"] = static_cast<double>(f.size());
}

void BM_BesovBlocks(benchmark::State& state) {
  const auto f = q_poly(static_cast<double>(state.range(0)));
  BesovParams bp;
  bp.p = 3.0;
  bp.theta = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(besov_norm_blocks(f, omega2(), bp));
}

}  // namespace

BENCHMARK(BM_GridDirect)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridFft)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QSize)->Arg(1 << 10)->Arg(1 << 20)->Arg(1 << 30);
// Second argument is 2p: p = 1 and 1.5 run the adaptive grid, p = 4 is exact.
BENCHMARK(BM_LpNorm)->ArgNames({"N", "two_p"})->Args({1024, 2})->Args({1024, 3})->Args({1024, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesovBlocks)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
