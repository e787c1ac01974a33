#include <benchmark/benchmark.h>

#include "netpot/classify.hpp"

namespace {

using namespace netpot;

Network subdivided_complete(int r) {
  std::vector<Edge> edges;
  for (int i = 1; i <= r + 1; ++i)
    for (int j = i + 1; j <= r + 1; ++j) edges.push_back({"v" + std::to_string(i),
                                                          "v" + std::to_string(j)});
  return make_subdivision(Network::from_edges(edges));
}

void BM_GroupInverse(benchmark::State& state) {
  Network net = subdivided_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(group_inverse(net));
  state.SetLabel("n=" + std::to_string(net.order()));
}
BENCHMARK(BM_GroupInverse)->Arg(3)->Arg(4)->Arg(5);

void BM_SolveEquilibrium(benchmark::State& state) {
  Network net = subdivided_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_equilibrium(net, 0));
}
BENCHMARK(BM_SolveEquilibrium)->Arg(4)->Arg(5);

void BM_DetectDbrg(benchmark::State& state) {
  Network net = subdivided_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detect_dbrg(net));
}
BENCHMARK(BM_DetectDbrg)->Arg(4)->Arg(5);

void BM_ClosedFormColumn(benchmark::State& state) {
  BiregularArray a{3, 4, 3, 2, {1, 1, 2}, {1, 1, 2, 2}};
  for (auto _ : state)
    for (int j = 0; j <= a.D0; ++j) benchmark::DoNotOptimize(group_inverse_entry(a, 0, j));
}
BENCHMARK(BM_ClosedFormColumn);

void BM_SearchArrays(benchmark::State& state) {
  SearchBounds bounds{state.range(0), 8, 60};
  for (auto _ : state) benchmark::DoNotOptimize(search_arrays(bounds));
}
BENCHMARK(BM_SearchArrays)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
