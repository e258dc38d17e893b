#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ambit {

/// Two-arm trial layout: per-arm sample sizes, each subject's outcome a
/// Bernoulli success. The welfare of choosing an arm is that arm's success
/// probability.
struct TrialDesign {
  TrialDesign(int n_a, int n_b);

  int n_a;
  int n_b;
};

/// A point in the extended state space: the success probabilities of the
/// two arms.
struct TrialState {
  TrialState(double p_a, double p_b);

  double p_a;
  double p_b;
};

/// A statistical decision rule: maps a sample summary (success counts and
/// arm sizes) to the probability of choosing arm B. Randomized rules return
/// interior probabilities.
class DecisionRule {
 public:
  using ChooseB =
      std::function<double(int k_a, int k_b, int n_a, int n_b)>;

  DecisionRule(std::string name, ChooseB choose_b);

  const std::string& name() const { return name_; }

  /// Probability of choosing arm B after observing k_a of n_a and k_b of
  /// n_b successes. Always in [0, 1].
  double choose_b_probability(int k_a, int k_b, int n_a, int n_b) const;

 private:
  std::string name_;
  ChooseB choose_b_;
};

/// Per-state performance of a rule: expected welfare across repeated
/// samples, the probability of choosing the inferior arm, the welfare gap
/// between arms, and regret = error probability x welfare gap.
struct RuleEvaluation {
  TrialState state{0.0, 0.0};
  double expected_welfare = 0.0;
  double error_probability = 0.0;
  double welfare_gap = 0.0;
  double regret = 0.0;
};

/// Monte Carlo counterpart with standard-error estimates and the sampling
/// contract that produced it.
struct RuleEvaluationMc {
  RuleEvaluation evaluation;
  double welfare_se = 0.0;
  double error_probability_se = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
};

/// One sample summary and its probability under the state's binomial
/// sampling process.
struct SampleOutcome {
  int k_a = 0;
  int k_b = 0;
  double probability = 0.0;
};

struct MaxRegretResult {
  double value = 0.0;
  TrialState argmax{0.0, 0.0};
};

/// All (k_a, k_b) summaries with their exact joint binomial probabilities.
/// Masses sum to 1 within 1e-12.
std::vector<SampleOutcome> enumerate_sample_distribution(
    const TrialState& state, const TrialDesign& design);

/// Exact evaluation of a rule in one state by enumerating every sample
/// summary. The regret identity (regret equals error probability times
/// welfare gap) holds to within accumulated rounding.
RuleEvaluation evaluate_rule(const DecisionRule& rule, const TrialState& state,
                             const TrialDesign& design);

/// Monte Carlo estimate of the same quantities. Deterministic for a fixed
/// seed; replications are independent Philox substreams, so results do not
/// depend on any execution schedule.
RuleEvaluationMc evaluate_rule_mc(const DecisionRule& rule,
                                  const TrialState& state,
                                  const TrialDesign& design,
                                  std::uint64_t replications,
                                  std::uint64_t seed);

/// Exact maximum regret over the state grid {0, step, ..., 1}^2, with an
/// attaining state (the first in row-major grid order).
MaxRegretResult max_regret(const DecisionRule& rule, const TrialDesign& design,
                           double grid_step);

enum class TieBreak {
  kRandomize,  // ties choose either arm with probability 1/2 (label-symmetric)
  kStatusQuo,  // ties keep arm A
};

/// Chooses the arm with the higher sample success rate.
DecisionRule empirical_success_rule(TieBreak tie = TieBreak::kRandomize);

/// One-sided test of "B improves on the status quo A" at level alpha:
/// chooses B only when the unpooled normal statistic for the difference in
/// success rates exceeds the 1-alpha standard normal quantile. Degenerate
/// summaries with zero estimated variance choose B only on a positive
/// difference.
DecisionRule test_rule(double alpha);

/// A prior point mass on one trial state.
struct PriorPoint {
  TrialState state;
  double weight = 0.0;
};

/// Chooses the arm with the higher posterior mean success probability under
/// a finite-support prior (posterior via the binomial likelihood); ties
/// choose B with probability 1/2.
DecisionRule bayes_rule(std::vector<PriorPoint> support);

}  // namespace ambit
