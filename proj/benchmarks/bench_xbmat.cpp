#include <benchmark/benchmark.h>

#include "xbmat/path_family.hpp"
#include "xbmat/tmatrix.hpp"
#include "xbmat/tutte.hpp"

using namespace xbmat;

static void BM_EdgeSubsetsComplete(benchmark::State& state) {
  const Multigraph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xb_edge_subsets(g, 1));
}
BENCHMARK(BM_EdgeSubsetsComplete)->DenseRange(3, 6);

static void BM_SubgraphTriples(benchmark::State& state) {
  const Multigraph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xb_subgraph_triples(g));
}
BENCHMARK(BM_SubgraphTriples)->DenseRange(2, 6);

static void BM_ColoringOracle(benchmark::State& state) {
  const Multigraph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xb_coloring_oracle(g, g.vertex_count(), 1));
}
BENCHMARK(BM_ColoringOracle)->DenseRange(3, 6);

static void BM_MatrixBlock(benchmark::State& state) {
  const Multigraph g = glue_sum(complete(4), path(3));
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const TutteMatrix m(RootedGraph::standard(g));
    benchmark::DoNotOptimize(m.block(size, size));
  }
}
BENCHMARK(BM_MatrixBlock)->Arg(4)->Arg(6)->Arg(8);

static void BM_MulBlock(benchmark::State& state) {
  const TutteMatrix g(RootedGraph::standard(complete(4)));
  const TutteMatrix h(RootedGraph::standard(star(4)));
  g.block(10, 10);
  h.block(10, 10);
  for (auto _ : state) benchmark::DoNotOptimize(mul_block(g, h, 6, 6));
}
BENCHMARK(BM_MulBlock);

static void BM_Reversal(benchmark::State& state) {
  const Multigraph g = glue_sum(path(2), complete(3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reversal(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Reversal)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
