#include "ambit/decide.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ambit {

namespace {

std::string grid_state_name(double m_a, double m_b) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "a=%.10g b=%.10g", m_a, m_b);
  return buf;
}

// Axis values lo, lo+step, ..., with hi always included.
std::vector<double> grid_axis(double lo, double hi, double step) {
  std::vector<double> axis;
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  for (std::size_t k = 0; k <= count; ++k) {
    axis.push_back(std::min(hi, lo + static_cast<double>(k) * step));
  }
  if (axis.back() < hi - 1e-12) axis.push_back(hi);
  return axis;
}

DecisionProblem build_two_treatment(const std::vector<double>& a_values,
                                    const std::vector<double>& b_values) {
  std::vector<std::string> states;
  std::vector<double> welfare_a;
  std::vector<double> welfare_b;
  for (double ma : a_values) {
    for (double mb : b_values) {
      states.push_back(grid_state_name(ma, mb));
      welfare_a.push_back(ma);
      welfare_b.push_back(mb);
    }
  }
  std::vector<double> welfare = welfare_a;
  welfare.insert(welfare.end(), welfare_b.begin(), welfare_b.end());
  return DecisionProblem({"A", "B"}, std::move(states), std::move(welfare));
}

}  // namespace

DecisionProblem::DecisionProblem(std::vector<std::string> actions,
                                 std::vector<std::string> states,
                                 std::vector<double> welfare)
    : actions_(std::move(actions)),
      states_(std::move(states)),
      welfare_(std::move(welfare)) {
  if (actions_.empty() || states_.empty()) {
    throw std::invalid_argument("decision problem requires actions and states");
  }
  if (welfare_.size() != actions_.size() * states_.size()) {
    throw std::invalid_argument(
        "welfare matrix size does not match actions x states");
  }
  for (double w : welfare_) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("welfare must be finite everywhere");
    }
  }
}

DecisionProblem DecisionProblem::restricted_to(
    const std::vector<std::size_t>& actions) const {
  std::vector<std::string> names;
  std::vector<double> welfare;
  for (std::size_t a : actions) {
    if (a >= actions_.size()) {
      throw std::invalid_argument("action index out of range");
    }
    names.push_back(actions_[a]);
    for (std::size_t s = 0; s < states_.size(); ++s) {
      welfare.push_back(this->welfare(a, s));
    }
  }
  return DecisionProblem(std::move(names), states_, std::move(welfare));
}

Prior::Prior(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("prior requires at least one weight");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("prior weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("prior weights must sum to 1");
  }
}

std::vector<std::size_t> dominated_actions(const DecisionProblem& problem) {
  const std::size_t na = problem.action_count();
  const std::size_t ns = problem.state_count();
  std::vector<std::size_t> dominated;
  for (std::size_t c = 0; c < na; ++c) {
    bool is_dominated = false;
    for (std::size_t d = 0; d < na && !is_dominated; ++d) {
      if (d == c) continue;
      bool weakly_better = true;
      bool strictly_somewhere = false;
      for (std::size_t s = 0; s < ns; ++s) {
        if (problem.welfare(d, s) < problem.welfare(c, s)) {
          weakly_better = false;
          break;
        }
        if (problem.welfare(d, s) > problem.welfare(c, s)) {
          strictly_somewhere = true;
        }
      }
      is_dominated = weakly_better && strictly_somewhere;
    }
    if (is_dominated) dominated.push_back(c);
  }
  return dominated;
}

std::vector<double> regret_table(const DecisionProblem& problem) {
  const std::size_t na = problem.action_count();
  const std::size_t ns = problem.state_count();
  std::vector<double> best(ns, -std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < na; ++a) {
      best[s] = std::max(best[s], problem.welfare(a, s));
    }
  }
  std::vector<double> regret(na * ns);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t s = 0; s < ns; ++s) {
      regret[a * ns + s] = best[s] - problem.welfare(a, s);
    }
  }
  return regret;
}

Choice maximin(const DecisionProblem& problem) {
  std::size_t best_action = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < problem.action_count(); ++a) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < problem.state_count(); ++s) {
      worst = std::min(worst, problem.welfare(a, s));
    }
    if (worst > best_value) {
      best_value = worst;
      best_action = a;
    }
  }
  return {best_action, problem.actions()[best_action], best_value};
}

Choice minimax_regret(const DecisionProblem& problem) {
  const std::vector<double> regret = regret_table(problem);
  const std::size_t ns = problem.state_count();
  std::size_t best_action = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < problem.action_count(); ++a) {
    double worst = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
      worst = std::max(worst, regret[a * ns + s]);
    }
    if (worst < best_value) {
      best_value = worst;
      best_action = a;
    }
  }
  return {best_action, problem.actions()[best_action], best_value};
}

Choice bayes(const DecisionProblem& problem, const Prior& prior) {
  if (prior.size() != problem.state_count()) {
    throw std::invalid_argument("prior dimension does not match state space");
  }
  std::size_t best_action = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < problem.action_count(); ++a) {
    double avg = 0.0;
    for (std::size_t s = 0; s < problem.state_count(); ++s) {
      avg += prior.weights()[s] * problem.welfare(a, s);
    }
    if (avg > best_value) {
      best_value = avg;
      best_action = a;
    }
  }
  return {best_action, problem.actions()[best_action], best_value};
}

TreatmentLabel two_treatment_choice(const Interval& region_a,
                                    const Interval& region_b,
                                    TwoTreatmentCriterion criterion) {
  if (region_b.hi() <= region_a.lo()) return TreatmentLabel::kA;
  if (region_a.hi() <= region_b.lo()) return TreatmentLabel::kB;
  switch (criterion) {
    case TwoTreatmentCriterion::kMaximin:
      return region_a.lo() >= region_b.lo() ? TreatmentLabel::kA
                                            : TreatmentLabel::kB;
    case TwoTreatmentCriterion::kMinimaxRegret: {
      const double regret_a = region_b.hi() - region_a.lo();
      const double regret_b = region_a.hi() - region_b.lo();
      return regret_a <= regret_b ? TreatmentLabel::kA : TreatmentLabel::kB;
    }
  }
  throw std::logic_error("unreachable");
}

AllocationResult mmr_allocation(const Interval& region_a,
                                const Interval& region_b) {
  if (region_b.hi() <= region_a.lo()) return {Allocation{0.0}, 0.0};
  if (region_a.hi() <= region_b.lo()) return {Allocation{1.0}, 0.0};
  const double regret_all_a = region_b.hi() - region_a.lo();
  const double regret_all_b = region_a.hi() - region_b.lo();
  const double fraction_b = regret_all_a / (regret_all_a + regret_all_b);
  return {Allocation{fraction_b}, fraction_b * regret_all_b};
}

double allocation_max_regret(const Interval& region_a, const Interval& region_b,
                             double fraction_b) {
  if (fraction_b < 0.0 || fraction_b > 1.0) {
    throw std::invalid_argument("allocation fraction must lie in [0, 1]");
  }
  const double b_better = (1.0 - fraction_b) * (region_b.hi() - region_a.lo());
  const double a_better = fraction_b * (region_a.hi() - region_b.lo());
  return std::max({b_better, a_better, 0.0});
}

DecisionProblem two_treatment_problem(const Interval& region_a,
                                      const Interval& region_b) {
  return build_two_treatment({region_a.lo(), region_a.hi()},
                             {region_b.lo(), region_b.hi()});
}

DecisionProblem two_treatment_problem_grid(const Interval& region_a,
                                           const Interval& region_b,
                                           double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  return build_two_treatment(grid_axis(region_a.lo(), region_a.hi(), step),
                             grid_axis(region_b.lo(), region_b.hi(), step));
}

}  // namespace ambit
