// Compares the OpenMP compound kernel against the serial reference on both
// entry types. Minor counts grow as C(rows,k)*C(cols,k), so the mid-range
// k values dominate.
#include <benchmark/benchmark.h>

#include <random>

#include "miqf/exterior.hpp"

namespace {

miqf::CMatrix random_cmatrix(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto unit = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
  miqf::CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = miqf::cplx(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
  return m;
}

miqf::KMatrix random_kmatrix(int n, const miqf::FieldContext& ctx, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto small = [&] { return static_cast<long>(eng() % 7) - 3; };
  miqf::KMatrix m(n, n, ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = miqf::KElement{miqf::Rational(small(), 1 + eng() % 3), miqf::Rational(small(), 1 + eng() % 3)};
  return m;
}

void BM_compound_complex_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  miqf::CMatrix m = random_cmatrix(n, 99);
  for (auto _ : state) benchmark::DoNotOptimize(miqf::compound_serial(m, k));
}

void BM_compound_complex_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  miqf::CMatrix m = random_cmatrix(n, 99);
  for (auto _ : state) benchmark::DoNotOptimize(miqf::compound(m, k));
}

void BM_compound_exact_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  miqf::FieldContext ctx(3);
  miqf::KMatrix m = random_kmatrix(n, ctx, 7);
  for (auto _ : state) benchmark::DoNotOptimize(miqf::compound_serial(m, k));
}

void BM_compound_exact_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  miqf::FieldContext ctx(3);
  miqf::KMatrix m = random_kmatrix(n, ctx, 7);
  for (auto _ : state) benchmark::DoNotOptimize(miqf::compound(m, k));
}

}  // namespace

BENCHMARK(BM_compound_complex_serial)->Args({10, 3})->Args({12, 4})->Args({12, 6});
BENCHMARK(BM_compound_complex_parallel)->Args({10, 3})->Args({12, 4})->Args({12, 6});
BENCHMARK(BM_compound_exact_serial)->Args({7, 3})->Args({8, 3})->Args({8, 4});
BENCHMARK(BM_compound_exact_parallel)->Args({7, 3})->Args({8, 3})->Args({8, 4});

BENCHMARK_MAIN();
