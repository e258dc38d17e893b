#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ambit/bounds.hpp"
#include "ambit/decide.hpp"
#include "ambit/interval.hpp"
#include "ambit/wald.hpp"

namespace {

using namespace ambit;

MissingDataSet synthetic_missing(std::size_t records) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<MissingDataRecord> out(records);
  for (MissingDataRecord& r : out) {
    if (unit(rng) < 0.7) r.outcome = unit(rng);
  }
  return MissingDataSet(std::move(out), OutcomeRange(0.0, 1.0));
}

void BM_MeanBoundMissing(benchmark::State& state) {
  const MissingDataSet data =
      synthetic_missing(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_bound_missing(data));
  }
}
BENCHMARK(BM_MeanBoundMissing)->Arg(1000)->Arg(100000);

void BM_Intersect(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 0.5);
  std::vector<Interval> intervals;
  for (int i = 0; i < state.range(0); ++i) {
    const double lo = unit(rng);
    intervals.emplace_back(lo, lo + 0.5);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(intervals));
  }
}
BENCHMARK(BM_Intersect)->Arg(16)->Arg(1024);

void BM_MinimaxRegret(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> actions(n), states(n);
  std::vector<double> welfare(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    actions[i] = "c" + std::to_string(i);
    states[i] = "s" + std::to_string(i);
  }
  for (double& w : welfare) w = unit(rng);
  const DecisionProblem problem(actions, states, welfare);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimax_regret(problem));
  }
}
BENCHMARK(BM_MinimaxRegret)->Arg(8)->Arg(64);

void BM_ExactRuleEvaluation(benchmark::State& state) {
  const TrialDesign design(static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)));
  const TrialState trial_state(0.55, 0.45);
  const DecisionRule rule = empirical_success_rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_rule(rule, trial_state, design));
  }
}
BENCHMARK(BM_ExactRuleEvaluation)->Arg(15)->Arg(100)->Arg(500);

void BM_MaxRegretGrid(benchmark::State& state) {
  const TrialDesign design(15, 15);
  const DecisionRule rule = empirical_success_rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_regret(rule, design, 0.05));
  }
}
BENCHMARK(BM_MaxRegretGrid);

void BM_MonteCarloEvaluation(benchmark::State& state) {
  const TrialDesign design(50, 50);
  const TrialState trial_state(0.55, 0.45);
  const DecisionRule rule = empirical_success_rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_rule_mc(rule, trial_state, design,
                         static_cast<std::uint64_t>(state.range(0)), 0));
  }
}
BENCHMARK(BM_MonteCarloEvaluation)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
