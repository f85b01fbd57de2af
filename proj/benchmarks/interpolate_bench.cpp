#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "nestcraig/interpolate.hpp"

using namespace nestcraig;
using nestcraig::testing::Gen;

namespace {

// n members of width w over distinct atoms.
Interpolant grid(std::size_t n, std::size_t w) {
  std::vector<FlatSequent> members;
  for (std::size_t i = 0; i < n; ++i) {
    FlatSequent m;
    for (std::size_t j = 0; j < w; ++j) m.right.push_back({"x", Formula::atom("a" + std::to_string(i * w + j))});
    members.push_back(canonical(m));
  }
  return Interpolant::make(std::move(members));
}

void BM_OrthogonalTense(benchmark::State& state) {
  const Interpolant i = grid(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_tense(i));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrthogonalTense)->DenseRange(1, 7);

void BM_OrthogonalBiRandom(benchmark::State& state) {
  Gen g(7);
  std::vector<Interpolant> pool;
  for (int k = 0; k < 64; ++k) pool.push_back(g.interpolant(Logic::BiInt, 3, 3));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_bi(pool[k++ % pool.size()]));
}
BENCHMARK(BM_OrthogonalBiRandom);

void BM_DoubleOrthogonal(benchmark::State& state) {
  const Interpolant i = grid(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_tense(orthogonal_tense(i)));
}
BENCHMARK(BM_DoubleOrthogonal)->DenseRange(1, 5);

void BM_CraigBi(benchmark::State& state) {
  const Formula a = parse("p & (p -> q) & (q -> r)", Logic::BiInt);
  const Formula b = parse("r | s", Logic::BiInt);
  SearchConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(craig_bi(a, b, c));
}
BENCHMARK(BM_CraigBi);

}  // namespace
