#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "polyspec/graph.hpp"
#include "polyspec/invariants.hpp"
#include "polyspec/oracle.hpp"
#include "polyspec/roots.hpp"
#include "polyspec/spectrum.hpp"

namespace {

using namespace polyspec;

// Base spectrum with `count` distinct values in [0, 2).
Spectrum synthetic_spectrum(int count) {
  std::vector<SpectrumEntry> entries{{0.0, BigInt(1), Source::Zero}};
  for (int i = 1; i < count; ++i) {
    entries.push_back({2.0 * i / count - 1e-4 * std::sin(i), BigInt(1), Source::Base});
  }
  return Spectrum(std::move(entries));
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

void BM_TransformSpectrum(benchmark::State& state) {
  const int distinct = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Spectrum spectrum = synthetic_spectrum(distinct);
  const SpectrumContext ctx{BigInt(distinct), BigInt(4 * distinct), false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform_spectrum(spectrum, ctx, n));
  }
}
BENCHMARK(BM_TransformSpectrum)->Args({100, 3})->Args({1000, 3})->Args({1000, 9})->Unit(benchmark::kMillisecond);

void BM_SolveLambdaEquation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double lambda = 0.0;
  for (auto _ : state) {
    lambda = lambda + 0.013 >= 2.0 ? 0.013 : lambda + 0.013;
    benchmark::DoNotOptimize(solve_lambda_equation(n, lambda));
  }
}
BENCHMARK(BM_SolveLambdaEquation)->Arg(3)->Arg(9)->Arg(33);

void BM_ClosedForms(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const BigInt big = pow_big(10, static_cast<unsigned long>(digits)) + 7;
  const Rational k0(big, big - 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kirchhoff_closed(Rational(24) * k0, 10, 12, 9, 3));
    benchmark::DoNotOptimize(kemeny_closed(k0, 10, 12, 9, 3));
    benchmark::DoNotOptimize(spanning_trees_closed(big, 10, 12, 9, 3));
  }
}
BENCHMARK(BM_ClosedForms)->Arg(100)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_EigSym(benchmark::State& state) {
  const Graph graph = iterate_transform(cycle(5), 2, 1);
  const Graph big = iterate_transform(graph, 2, static_cast<int>(state.range(0)));
  const oracle::DenseSymMatrix matrix = oracle::normalized_laplacian(big);
  state.counters["N"] = static_cast<double>(big.vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::eig_sym(matrix));
  }
}
BENCHMARK(BM_EigSym)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MatrixTreeCount(benchmark::State& state) {
  const Graph graph = iterate_transform(cycle(5), 2, static_cast<int>(state.range(0)));
  state.counters["N"] = static_cast<double>(graph.vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::matrix_tree_count(graph));
  }
}
BENCHMARK(BM_MatrixTreeCount)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
