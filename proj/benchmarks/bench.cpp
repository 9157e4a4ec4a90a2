#include <benchmark/benchmark.h>

#include "maxmaxflow/chromatic.hpp"
#include "maxmaxflow/enumerate.hpp"
#include "maxmaxflow/flowcut.hpp"
#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/invariants.hpp"

using namespace maxmaxflow;

namespace {

WeightedMultigraph random_instance(int n, int mult, std::uint64_t seed) {
  Rng rng(seed);
  RandomGraphConfig cfg;
  cfg.min_vertices = cfg.max_vertices = n;
  cfg.max_multiplicity = mult;
  cfg.weights = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  return random_graph(cfg, rng);
}

void BM_MaxFlow(benchmark::State& state) {
  const auto g = random_instance(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_flow(g, 0, g.vertex_count() - 1));
}
BENCHMARK(BM_MaxFlow)->Arg(8)->Arg(16)->Arg(32);

void BM_GomoryHu(benchmark::State& state) {
  const auto g = random_instance(static_cast<int>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gomory_hu(g));
}
BENCHMARK(BM_GomoryHu)->Arg(8)->Arg(16)->Arg(32);

void BM_LambdaTilde(benchmark::State& state) {
  const auto g = random_instance(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_tilde_bruteforce(g));
}
BENCHMARK(BM_LambdaTilde)->Arg(6)->Arg(9);

void BM_InequalityChain(benchmark::State& state) {
  const auto g = random_instance(9, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(inequality_chain(g));
}
BENCHMARK(BM_InequalityChain);

void BM_ClassSeries(benchmark::State& state) {
  const auto g = random_instance(7, 2, 5);
  SubgraphClassSpec spec;
  spec.kind = static_cast<ClassKind>(state.range(0));
  spec.X = {0, 3, 5};
  spec.Y = {1, 6};
  for (auto _ : state) benchmark::DoNotOptimize(class_count_series(g, spec, 6));
  state.SetLabel(class_kind_name(spec.kind));
}
BENCHMARK(BM_ClassSeries)
    ->Arg(static_cast<int>(ClassKind::T))
    ->Arg(static_cast<int>(ClassKind::F))
    ->Arg(static_cast<int>(ClassKind::C))
    ->Arg(static_cast<int>(ClassKind::BF))
    ->Arg(static_cast<int>(ClassKind::B));

void BM_ChromaticPolynomial(benchmark::State& state) {
  const auto g = random_instance(static_cast<int>(state.range(0)), 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(g));
}
BENCHMARK(BM_ChromaticPolynomial)->Arg(8)->Arg(12);

void BM_ChromaticRoots(benchmark::State& state) {
  const auto p = chromatic_polynomial(random_instance(12, 1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_roots(p));
}
BENCHMARK(BM_ChromaticRoots);

}  // namespace

BENCHMARK_MAIN();
