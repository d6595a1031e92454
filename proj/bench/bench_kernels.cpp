#include <benchmark/benchmark.h>

#include "gamma2/families.hpp"
#include "gamma2/functionals.hpp"
#include "gamma2/search.hpp"

namespace {

using namespace gamma2;

SymmetricPositiveFunction sample_function() {
  SampleSpec spec;
  spec.seed = 7;
  spec.amplitude = 0.8;
  return sample_random_symmetric(spec).function();
}

void BM_functionals_serial(benchmark::State& state) {
  const auto f = sample_function();
  const auto& rule = default_sphere_rule();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_functionals(f, rule, Execution::serial));
}

void BM_functionals_parallel(benchmark::State& state) {
  const auto f = sample_function();
  const auto& rule = default_sphere_rule();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_functionals(f, rule, Execution::parallel));
}

void BM_functionals_reference(benchmark::State& state) {
  const auto f = sample_function();
  const auto& rule = default_sphere_rule();
  for (auto _ : state) benchmark::DoNotOptimize(reference::evaluate_functionals(f, rule));
}

void BM_search(benchmark::State& state, Execution exec) {
  SearchOptions o;
  o.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_search(o, exec));
}

}  // namespace

BENCHMARK(BM_functionals_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_functionals_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_functionals_reference)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search, serial, gamma2::Execution::serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search, parallel, gamma2::Execution::parallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
