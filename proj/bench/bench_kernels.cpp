// Serial reference vs OpenMP kernel for each parallel code path.
// Arg 0 selects serial, arg 1 parallel.

#include <benchmark/benchmark.h>

#include "faceideal/face_ideal.hpp"
#include "faceideal/homology.hpp"
#include "faceideal/hypergraph.hpp"
#include "faceideal/resolution.hpp"

using namespace faceideal;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

SimplicialComplex cycle(int n) {
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) facets.push_back(Face{bit(i) | bit((i + 1) % n)});
  return SimplicialComplex(VertexUniverse::numbered(n), facets);
}

SimplicialComplex boundary(int n) {
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) facets.push_back(Face{full_mask(n) & ~bit(i)});
  return SimplicialComplex(VertexUniverse::numbered(n), facets);
}

void BM_Hochster(benchmark::State& state) {
  const auto ideal = face_ideal(cycle(7)).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(ideal, mode(state)));
}

void BM_TransversalsBruteforce(benchmark::State& state) {
  const auto ideal = face_ideal(cycle(9)).ideal;
  std::vector<Mask> edges;
  for (Monomial g : ideal.generators()) edges.push_back(g.support);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_transversals_bruteforce(edges, ideal.universe().all(), mode(state)));
}

void BM_TransversalsBranch(benchmark::State& state) {
  const auto ideal = face_ideal(boundary(9)).ideal;
  std::vector<Mask> edges;
  for (Monomial g : ideal.generators()) edges.push_back(g.support);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_transversals(edges, mode(state)));
}

void BM_CheckComplex(benchmark::State& state) {
  const auto r = build_resolution(boundary(9));
  for (auto _ : state) benchmark::DoNotOptimize(check_complex(r, mode(state)));
}

}  // namespace

BENCHMARK(BM_Hochster)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransversalsBruteforce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransversalsBranch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckComplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
