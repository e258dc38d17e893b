#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ambit/interval.hpp"

namespace ambit {

/// A finite decision problem: an ordered choice set, an ordered state space,
/// and a welfare matrix over (action, state). Welfare must be finite
/// everywhere. Action and state order is significant: every criterion breaks
/// ties toward the earliest action in declared order.
class DecisionProblem {
 public:
  /// `welfare` is row-major with one row per action.
  DecisionProblem(std::vector<std::string> actions,
                  std::vector<std::string> states, std::vector<double> welfare);

  std::size_t action_count() const { return actions_.size(); }
  std::size_t state_count() const { return states_.size(); }
  double welfare(std::size_t action, std::size_t state) const {
    return welfare_[action * states_.size() + state];
  }

  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<double>& welfare_matrix() const { return welfare_; }

  /// Copy of the problem keeping only the given action indices, in order.
  DecisionProblem restricted_to(const std::vector<std::size_t>& actions) const;

 private:
  std::vector<std::string> actions_;
  std::vector<std::string> states_;
  std::vector<double> welfare_;  // row-major, actions x states
};

/// Subjective probability weights over a problem's state space. Nonnegative,
/// summing to 1 within 1e-9.
class Prior {
 public:
  explicit Prior(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

/// Fraction of the population assigned to the second treatment.
struct Allocation {
  double fraction_b = 0.0;
};

/// A chosen action with the criterion value it attains.
struct Choice {
  std::size_t index = 0;
  std::string action;
  double value = 0.0;
};

/// Indices of weakly dominated actions, ascending: actions for which some
/// other action is at least as good in every state and strictly better in
/// some state.
std::vector<std::size_t> dominated_actions(const DecisionProblem& problem);

/// Row-major regret matrix: entry (action, state) is the gap between the
/// best welfare attainable in that state and the action's welfare.
std::vector<double> regret_table(const DecisionProblem& problem);

/// Action maximizing worst-case welfare across states.
Choice maximin(const DecisionProblem& problem);

/// Action minimizing the maximum regret across states.
Choice minimax_regret(const DecisionProblem& problem);

/// Action maximizing prior-weighted average welfare.
Choice bayes(const DecisionProblem& problem, const Prior& prior);

enum class TwoTreatmentCriterion { kMaximin, kMinimaxRegret };
enum class TreatmentLabel { kA, kB };

/// Singleton choice between two treatments whose mean outcomes are known
/// only to lie in region_a x region_b. Dominant cases short-circuit to
/// the dominant treatment; ties resolve to A.
TreatmentLabel two_treatment_choice(const Interval& region_a,
                                    const Interval& region_b,
                                    TwoTreatmentCriterion criterion);

struct AllocationResult {
  Allocation allocation;
  double max_regret = 0.0;
};

/// Minimax-regret fractional assignment across two treatments. Assigns
/// (U_b - L_a) / [(U_b - L_a) + (U_a - L_b)] of the population to B, which
/// equalizes the two worst-case corner regrets; dominant cases assign
/// everyone to the dominant treatment with zero max regret.
AllocationResult mmr_allocation(const Interval& region_a,
                                const Interval& region_b);

/// Worst-case regret over the rectangle of states for a fixed allocation:
/// the welfare of assigning fraction_b to B in state (m_a, m_b) is
/// (1 - fraction_b) * m_a + fraction_b * m_b, and the extrema lie at the
/// corners (U_a, L_b) and (L_a, U_b).
double allocation_max_regret(const Interval& region_a,
                             const Interval& region_b, double fraction_b);

/// Two-action decision problem over the four corners of the rectangle
/// region_a x region_b (welfare of each action is its own coordinate).
DecisionProblem two_treatment_problem(const Interval& region_a,
                                      const Interval& region_b);

/// Same problem over a discretized rectangle with the given grid step on
/// both axes (endpoints always included).
DecisionProblem two_treatment_problem_grid(const Interval& region_a,
                                           const Interval& region_b,
                                           double step);

}  // namespace ambit
