#include "orbchar/kernels.hpp"
#include "orbchar/rational.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace orbchar;
using namespace orbchar::kernels;

namespace {

std::vector<Rational> exact_input(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Rational> v(n);
  for (auto& x : v) x = rational(d(rng), 1 + std::abs(d(rng)) % 7);
  return v;
}

std::vector<Complex> float_input(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

std::vector<ClassTerm> class_terms() {
  return {{Complex(1.0), 0.0}, {Complex(0.5), 2.0943951}, {Complex(-0.25), 3.14159265}, {Complex(0.3), 1.2566371},
          {Complex(0.1), 2.5132741}};
}

template <bool Parallel>
void BM_cauchy_exact(benchmark::State& s) {
  const auto n = std::size_t(s.range(0));
  const auto a = exact_input(n, 1), b = exact_input(n, 2);
  for (auto _ : s)
    benchmark::DoNotOptimize(Parallel ? parallel::cauchy_product<Rational>(a, b, n)
                                      : serial::cauchy_product<Rational>(a, b, n));
}

template <bool Parallel>
void BM_cauchy_float(benchmark::State& s) {
  const auto n = std::size_t(s.range(0));
  const auto a = float_input(n, 1), b = float_input(n, 2);
  for (auto _ : s)
    benchmark::DoNotOptimize(Parallel ? parallel::cauchy_product<Complex>(a, b, n)
                                      : serial::cauchy_product<Complex>(a, b, n));
}

template <bool Parallel>
void BM_evaluate(benchmark::State& s) {
  const auto c = float_input(std::size_t(s.range(0)), 3);
  for (auto _ : s)
    benchmark::DoNotOptimize(Parallel ? parallel::evaluate(c, 0.02, -1.0 / 24, 4) : serial::evaluate(c, 0.02, -1.0 / 24, 4));
}

template <bool Parallel>
void BM_class_sum(benchmark::State& s) {
  const auto t = class_terms();
  for (auto _ : s)
    benchmark::DoNotOptimize(Parallel ? parallel::class_sum(t, s.range(0), true) : serial::class_sum(t, s.range(0), true));
}

}  // namespace

BENCHMARK(BM_cauchy_exact<false>)->Arg(200)->Arg(800);
BENCHMARK(BM_cauchy_exact<true>)->Arg(200)->Arg(800);
BENCHMARK(BM_cauchy_float<false>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_cauchy_float<true>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_evaluate<false>)->Arg(40000);
BENCHMARK(BM_evaluate<true>)->Arg(40000);
BENCHMARK(BM_class_sum<false>)->Arg(40000);
BENCHMARK(BM_class_sum<true>)->Arg(40000);

BENCHMARK_MAIN();
