// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/kernels.hpp"
#include "cyclemotive/multi_series.hpp"

namespace cm = cyclemotive;

namespace {

cm::kernels::SeriesTermList operand(std::uint32_t order, bool second) {
  const auto s = second ? cm::expand_inverse_product({{{0, 0, 1}, 4}, {{1, 1, 0}, 2}}, 3, order)
                        : cm::expand_inverse_product({{{1, 0, 0}, 3}, {{0, 1, 1}, 5}}, 3, order);
  return {s.terms().begin(), s.terms().end()};
}

template <auto Kernel>
void series_product(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  const auto a = operand(order, false);
  const auto b = operand(order, true);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b, order));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(a.size() * b.size()));
}

template <auto Kernel>
void rref_census(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::uint32_t>(state.range(1));
  const auto q = static_cast<std::uint32_t>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(k, n, q, cm::kDefaultBruteForceBudget));
}

}  // namespace

BENCHMARK(series_product<cm::kernels::truncated_product_serial>)->Name("series_product/serial")->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(series_product<cm::kernels::truncated_product_parallel>)->Name("series_product/parallel")->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(rref_census<cm::kernels::rref_census_serial>)->Name("rref_census/serial")->Args({2, 5, 5})->Args({3, 6, 3})->Args({2, 6, 5});
BENCHMARK(rref_census<cm::kernels::rref_census_parallel>)->Name("rref_census/parallel")->Args({2, 5, 5})->Args({3, 6, 3})->Args({2, 6, 5});

BENCHMARK_MAIN();
