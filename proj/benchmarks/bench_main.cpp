#include <benchmark/benchmark.h>

#include "rmk/rng.hpp"
#include "rmk/semantics.hpp"
#include "rmk/simulation.hpp"
#include "rmk/translation.hpp"

using namespace rmk;

namespace {

const SimilarityType kSmileCon = {UnaryOp::Smile, UnaryOp::Con};

KripkeModel bench_model(std::size_t n) { return random_model(n, 2, 4.0 / static_cast<double>(n), 0.5, 42); }

void BM_GreatestSimulation(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greatest_simulation(m, kSmileCon));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreatestSimulation)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_SymmetricSimulation(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  const auto l = kSmileCon.with(UnaryOp::Not);
  for (auto _ : state) benchmark::DoNotOptimize(greatest_simulation(m, l, SimMode::symmetric()));
}
BENCHMARK(BM_SymmetricSimulation)->RangeMultiplier(2)->Range(8, 128);

void BM_Bisimulation(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kripke_bisimulation(m));
}
BENCHMARK(BM_Bisimulation)->RangeMultiplier(2)->Range(8, 256);

void BM_Closure(benchmark::State& state) {
  const auto m = random_model(static_cast<std::size_t>(state.range(0)), 2, 0.35, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(definable_closure(m, kSmileCon));
}
BENCHMARK(BM_Closure)->DenseRange(3, 7);

void BM_TruthSet(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  SplitMix64 rng(3);
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  const auto f = random_formula(rng, 6, ops, 2);
  for (auto _ : state) benchmark::DoNotOptimize(truth_set(m, f));
}
BENCHMARK(BM_TruthSet)->RangeMultiplier(4)->Range(16, 1024);

void BM_StandardTranslationEval(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  SplitMix64 rng(5);
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  const auto f = random_formula(rng, 3, ops, 2);
  const auto st = standard_translation(kVarX, f);
  for (auto _ : state) benchmark::DoNotOptimize(fol_eval(m, st, {{kVarX, 0}}));
}
BENCHMARK(BM_StandardTranslationEval)->RangeMultiplier(2)->Range(4, 32);

void BM_Witness(benchmark::State& state) {
  const auto m = bench_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    WitnessBuilder wb(m, kSmileCon);
    std::size_t built = 0;
    for (WorldId w = 0; w < m.n_worlds(); ++w)
      for (WorldId v = 0; v < m.n_worlds(); ++v)
        if (wb.witness(w, v)) ++built;
    benchmark::DoNotOptimize(built);
  }
}
BENCHMARK(BM_Witness)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
