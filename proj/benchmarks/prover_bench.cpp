#include <benchmark/benchmark.h>

#include "nestcraig/interpolate.hpp"
#include "nestcraig/prover.hpp"

using namespace nestcraig;

namespace {

SearchConfig transitive(std::size_t bound) {
  SearchConfig c;
  c.depth_bound = bound;
  c.axioms = PathAxiomSystem({parse_axiom("dd -> d")});
  return c;
}

const Formula& worked() {
  static const Formula f = normalize(parse("[]<>~q -> [](<>~p | <><>p)", Logic::Tense));
  return f;
}

void BM_ProveWorked(benchmark::State& state) {
  const SearchConfig c = transitive(8);
  const LabelledSequent goal = right_goal(worked());
  for (auto _ : state) benchmark::DoNotOptimize(prove_kt(goal, c));
}
BENCHMARK(BM_ProveWorked);

void BM_CraigWorked(benchmark::State& state) {
  const SearchConfig c = transitive(8);
  const Formula a = worked().lhs();
  const Formula b = worked().rhs();
  for (auto _ : state) benchmark::DoNotOptimize(craig_tense(negate_nnf(a), b, c));
}
BENCHMARK(BM_CraigWorked);

// Chains of n boxes: []...[]p -> []...[](p | q).
void BM_ProveBoxChain(benchmark::State& state) {
  Formula a = Formula::atom("p");
  Formula b = Formula::disj(Formula::atom("p"), Formula::atom("q"));
  for (int i = 0; i < state.range(0); ++i) {
    a = Formula::box(a);
    b = Formula::box(b);
  }
  const LabelledSequent goal = right_goal(Formula::disj(negate_nnf(a), b));
  SearchConfig c;
  c.depth_bound = static_cast<std::size_t>(state.range(0)) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(prove_kt(goal, c));
}
BENCHMARK(BM_ProveBoxChain)->DenseRange(1, 8);

void BM_ProveBiModusPonens(benchmark::State& state) {
  const LabelledSequent goal = right_goal(parse("p & (p -> q) & (q -> r) -> r", Logic::BiInt));
  SearchConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(prove_bi(goal, c));
}
BENCHMARK(BM_ProveBiModusPonens);

void BM_RefuteExcludedMiddle(benchmark::State& state) {
  const LabelledSequent goal = right_goal(parse("p | (p -> bot)", Logic::BiInt));
  SearchConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(prove_bi(goal, c));
}
BENCHMARK(BM_RefuteExcludedMiddle);

}  // namespace
