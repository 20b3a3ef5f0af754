// Micro-benchmarks for the hot kernels: row reduction, orbit towers, the
// memoized rank oracle, and the double-description step.

#include <benchmark/benchmark.h>

#include <vector>

#include "clrp/generation.hpp"
#include "clrp/group.hpp"
#include "clrp/polymatroid.hpp"
#include "clrp/rate_region.hpp"
#include "clrp/subspace.hpp"

using namespace clrp;

namespace {

void BM_Canonicalize(benchmark::State& state) {
  const FiniteField& f = field_cache(2, 1);
  // a fixed full-rank-ish 3x6 system with redundancy
  std::vector<std::vector<felt>> rows = {
      {1, 0, 1, 1, 0, 1},
      {0, 1, 1, 0, 1, 1},
      {1, 1, 0, 1, 1, 0},
  };
  for (auto _ : state) {
    Subspace s = canonicalize(rows, 6, f);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Canonicalize);

void BM_OrbitTower(benchmark::State& state) {
  const GrassmannianIndex& dom = grassmannian_cache(3, {1, 2}, 2);
  const auto gens = group_generators(3, 2);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OrbitLevels tower(dom, gens);
    for (int m = 0; m < depth; ++m) tower.extend(nullptr);
    benchmark::DoNotOptimize(tower.depth());
  }
}
BENCHMARK(BM_OrbitTower)->Arg(3)->Arg(4);

void BM_RankOracle(benchmark::State& state) {
  const GrassmannianIndex& gi = grassmannian_cache(3, {1}, 2);
  std::vector<int> handles;
  for (int h = 0; h < gi.size(); ++h) handles.push_back(h);
  for (auto _ : state) {
    PolymatroidRep rep(gi, handles);  // fresh memo table each round
    int acc = 0;
    for (gmask m = 1; m < (gmask(1) << rep.ground_size()); ++m)
      acc += rep.rank(m);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RankOracle);

void BM_DoubleDescription(benchmark::State& state) {
  HRep h;
  h.dim = 5;
  h.ineq = {
      {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
      {0, 0, 0, 0, 1}, {1, 1, 0, 0, -1}, {0, 1, 1, 0, -1}, {0, 0, 1, 1, -1},
      {-1, 2, 0, 1, 0}, {1, -1, 3, 0, 0},
  };
  for (auto _ : state) {
    Cone c = dd_from_halfspaces(h);
    benchmark::DoNotOptimize(c.rays.size());
  }
}
BENCHMARK(BM_DoubleDescription);

}  // namespace

BENCHMARK_MAIN();
