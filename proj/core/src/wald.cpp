#include "ambit/wald.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "ambit/philox.hpp"

namespace ambit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_binomial_pmf(int n, double p, int k) {
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return k == n ? 0.0 : kNegInf;
  const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0);
  return log_choose + k * std::log(p) + (n - k) * std::log1p(-p);
}

// Exact-mode masses are computed in log space, exponentiated, and
// normalized so they sum to 1 up to one rounding per entry.
std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
  if (p == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p == 1.0) {
    pmf[static_cast<std::size_t>(n)] = 1.0;
    return pmf;
  }
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    pmf[static_cast<std::size_t>(k)] = std::exp(log_binomial_pmf(n, p, k));
    sum += pmf[static_cast<std::size_t>(k)];
  }
  for (double& mass : pmf) mass /= sum;
  return pmf;
}

struct ExactMoments {
  double expected_welfare = 0.0;
  double error_probability = 0.0;
};

// choose_b(k_a, k_b) must return the rule's probability of picking arm B.
template <typename ChooseB>
ExactMoments exact_moments(ChooseB&& choose_b, const TrialState& state,
                           const TrialDesign& design) {
  const std::vector<double> pmf_a = binomial_pmf(design.n_a, state.p_a);
  const std::vector<double> pmf_b = binomial_pmf(design.n_b, state.p_b);
  ExactMoments m;
  for (int k_a = 0; k_a <= design.n_a; ++k_a) {
    const double pa = pmf_a[static_cast<std::size_t>(k_a)];
    if (pa == 0.0) continue;
    for (int k_b = 0; k_b <= design.n_b; ++k_b) {
      const double prob = pa * pmf_b[static_cast<std::size_t>(k_b)];
      if (prob == 0.0) continue;
      const double r = choose_b(k_a, k_b);
      m.expected_welfare += prob * ((1.0 - r) * state.p_a + r * state.p_b);
      if (state.p_a > state.p_b) {
        m.error_probability += prob * r;
      } else if (state.p_b > state.p_a) {
        m.error_probability += prob * (1.0 - r);
      }
    }
  }
  return m;
}

RuleEvaluation finish_evaluation(const TrialState& state,
                                 const ExactMoments& m) {
  const double best = std::max(state.p_a, state.p_b);
  const double welfare = std::min(m.expected_welfare, best);
  return RuleEvaluation{state, welfare, m.error_probability,
                        std::abs(state.p_a - state.p_b), best - welfare};
}

// Probability grid {0, step, ..., 1}, endpoints exact.
std::vector<double> probability_grid(double step) {
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(1.0 / step + 1e-9);
  for (std::size_t k = 0; k <= count; ++k) {
    grid.push_back(std::min(1.0, static_cast<double>(k) * step));
  }
  if (grid.back() < 1.0 - 1e-12) grid.push_back(1.0);
  return grid;
}

}  // namespace

TrialDesign::TrialDesign(int n_a, int n_b) : n_a(n_a), n_b(n_b) {
  if (n_a < 1 || n_b < 1) {
    throw std::invalid_argument("trial design requires at least one subject per arm");
  }
}

TrialState::TrialState(double p_a, double p_b) : p_a(p_a), p_b(p_b) {
  if (!(p_a >= 0.0 && p_a <= 1.0) || !(p_b >= 0.0 && p_b <= 1.0)) {
    throw std::invalid_argument("success probabilities must lie in [0, 1]");
  }
}

DecisionRule::DecisionRule(std::string name, ChooseB choose_b)
    : name_(std::move(name)), choose_b_(std::move(choose_b)) {
  if (!choose_b_) {
    throw std::invalid_argument("decision rule requires a choice function");
  }
}

double DecisionRule::choose_b_probability(int k_a, int k_b, int n_a,
                                          int n_b) const {
  const double r = choose_b_(k_a, k_b, n_a, n_b);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::logic_error("rule '" + name_ +
                           "' returned a choice probability outside [0, 1]");
  }
  return r;
}

std::vector<SampleOutcome> enumerate_sample_distribution(
    const TrialState& state, const TrialDesign& design) {
  const std::vector<double> pmf_a = binomial_pmf(design.n_a, state.p_a);
  const std::vector<double> pmf_b = binomial_pmf(design.n_b, state.p_b);
  std::vector<SampleOutcome> out;
  out.reserve(pmf_a.size() * pmf_b.size());
  for (int k_a = 0; k_a <= design.n_a; ++k_a) {
    for (int k_b = 0; k_b <= design.n_b; ++k_b) {
      out.push_back(SampleOutcome{
          k_a, k_b,
          pmf_a[static_cast<std::size_t>(k_a)] *
              pmf_b[static_cast<std::size_t>(k_b)]});
    }
  }
  return out;
}

RuleEvaluation evaluate_rule(const DecisionRule& rule, const TrialState& state,
                             const TrialDesign& design) {
  return finish_evaluation(
      state, exact_moments(
                 [&](int k_a, int k_b) {
                   return rule.choose_b_probability(k_a, k_b, design.n_a,
                                                    design.n_b);
                 },
                 state, design));
}

RuleEvaluationMc evaluate_rule_mc(const DecisionRule& rule,
                                  const TrialState& state,
                                  const TrialDesign& design,
                                  std::uint64_t replications,
                                  std::uint64_t seed) {
  if (replications < 1) {
    throw std::invalid_argument("Monte Carlo requires at least one replication");
  }
  const Philox4x32 gen(seed);
  const int draws_per_rep = design.n_a + design.n_b;
  double w_sum = 0.0, w_sumsq = 0.0;
  double e_sum = 0.0, e_sumsq = 0.0;
  for (std::uint64_t rep = 0; rep < replications; ++rep) {
    int k_a = 0, k_b = 0;
    Philox4x32::Block block{};
    for (int draw = 0; draw < draws_per_rep; ++draw) {
      const int word = draw % 4;
      if (word == 0) {
        block = gen.block(rep, static_cast<std::uint32_t>(draw / 4));
      }
      const double u = Philox4x32::to_uniform(block[static_cast<std::size_t>(word)]);
      if (draw < design.n_a) {
        if (u < state.p_a) ++k_a;
      } else {
        if (u < state.p_b) ++k_b;
      }
    }
    const double r =
        rule.choose_b_probability(k_a, k_b, design.n_a, design.n_b);
    const double w = (1.0 - r) * state.p_a + r * state.p_b;
    double e = 0.0;
    if (state.p_a > state.p_b) {
      e = r;
    } else if (state.p_b > state.p_a) {
      e = 1.0 - r;
    }
    w_sum += w;
    w_sumsq += w * w;
    e_sum += e;
    e_sumsq += e * e;
  }
  const double n = static_cast<double>(replications);
  const double w_mean = w_sum / n;
  const double e_mean = e_sum / n;
  auto standard_error = [n](double sumsq, double mean) {
    if (n < 2.0) return 0.0;
    const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
    return std::sqrt(var / n);
  };
  const double best = std::max(state.p_a, state.p_b);
  RuleEvaluationMc out;
  out.evaluation = RuleEvaluation{state, w_mean, e_mean,
                                  std::abs(state.p_a - state.p_b),
                                  best - w_mean};
  out.welfare_se = standard_error(w_sumsq, w_mean);
  out.error_probability_se = standard_error(e_sumsq, e_mean);
  out.replications = replications;
  out.seed = seed;
  return out;
}

MaxRegretResult max_regret(const DecisionRule& rule, const TrialDesign& design,
                           double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw std::invalid_argument("grid step must lie in (0, 0.5]");
  }
  // One rule call per summary, shared across all grid states.
  const std::size_t cols = static_cast<std::size_t>(design.n_b) + 1;
  std::vector<double> table(
      (static_cast<std::size_t>(design.n_a) + 1) * cols);
  for (int k_a = 0; k_a <= design.n_a; ++k_a) {
    for (int k_b = 0; k_b <= design.n_b; ++k_b) {
      table[static_cast<std::size_t>(k_a) * cols + static_cast<std::size_t>(k_b)] =
          rule.choose_b_probability(k_a, k_b, design.n_a, design.n_b);
    }
  }
  auto table_rule = [&](int k_a, int k_b) {
    return table[static_cast<std::size_t>(k_a) * cols +
                 static_cast<std::size_t>(k_b)];
  };

  const std::vector<double> grid = probability_grid(grid_step);
  MaxRegretResult result{-1.0, TrialState(0.0, 0.0)};
  for (double p_a : grid) {
    for (double p_b : grid) {
      const TrialState state(p_a, p_b);
      const RuleEvaluation eval =
          finish_evaluation(state, exact_moments(table_rule, state, design));
      if (eval.regret > result.value) {
        result.value = eval.regret;
        result.argmax = state;
      }
    }
  }
  return result;
}

DecisionRule empirical_success_rule(TieBreak tie) {
  const bool status_quo_ties = tie == TieBreak::kStatusQuo;
  return DecisionRule(
      status_quo_ties ? "empirical-success(status-quo-ties)"
                      : "empirical-success",
      [status_quo_ties](int k_a, int k_b, int n_a, int n_b) {
        const double rate_a = static_cast<double>(k_a) / n_a;
        const double rate_b = static_cast<double>(k_b) / n_b;
        if (rate_b > rate_a) return 1.0;
        if (rate_b < rate_a) return 0.0;
        return status_quo_ties ? 0.0 : 0.5;
      });
}

DecisionRule test_rule(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("test level must lie in (0, 1)");
  }
  const double z = boost::math::quantile(
      boost::math::normal_distribution<double>(), 1.0 - alpha);
  char name[64];
  std::snprintf(name, sizeof(name), "test(alpha=%g)", alpha);
  return DecisionRule(name, [z](int k_a, int k_b, int n_a, int n_b) {
    const double rate_a = static_cast<double>(k_a) / n_a;
    const double rate_b = static_cast<double>(k_b) / n_b;
    const double diff = rate_b - rate_a;
    const double variance =
        rate_a * (1.0 - rate_a) / n_a + rate_b * (1.0 - rate_b) / n_b;
    if (variance <= 0.0) return diff > 0.0 ? 1.0 : 0.0;
    return diff / std::sqrt(variance) > z ? 1.0 : 0.0;
  });
}

DecisionRule bayes_rule(std::vector<PriorPoint> support) {
  if (support.empty()) {
    throw std::invalid_argument("prior support must be nonempty");
  }
  double total = 0.0;
  for (const PriorPoint& point : support) {
    if (!(point.weight >= 0.0) || !std::isfinite(point.weight)) {
      throw std::invalid_argument("prior weights must be nonnegative");
    }
    total += point.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("prior weights must sum to 1");
  }
  char name[64];
  std::snprintf(name, sizeof(name), "bayes(%zu states)", support.size());
  return DecisionRule(
      name, [support = std::move(support)](int k_a, int k_b, int n_a, int n_b) {
        // Posterior over the finite support, in log space.
        std::vector<double> log_weights(support.size(), kNegInf);
        double max_lw = kNegInf;
        for (std::size_t i = 0; i < support.size(); ++i) {
          const PriorPoint& point = support[i];
          if (point.weight == 0.0) continue;
          log_weights[i] = std::log(point.weight) +
                           log_binomial_pmf(n_a, point.state.p_a, k_a) +
                           log_binomial_pmf(n_b, point.state.p_b, k_b);
          max_lw = std::max(max_lw, log_weights[i]);
        }
        double mass = 0.0, mean_a = 0.0, mean_b = 0.0;
        if (max_lw == kNegInf) {
          // Summary impossible under every support state: fall back to the
          // prior itself.
          for (const PriorPoint& point : support) {
            mass += point.weight;
            mean_a += point.weight * point.state.p_a;
            mean_b += point.weight * point.state.p_b;
          }
        } else {
          for (std::size_t i = 0; i < support.size(); ++i) {
            if (log_weights[i] == kNegInf) continue;
            const double w = std::exp(log_weights[i] - max_lw);
            mass += w;
            mean_a += w * support[i].state.p_a;
            mean_b += w * support[i].state.p_b;
          }
        }
        mean_a /= mass;
        mean_b /= mass;
        if (mean_b > mean_a) return 1.0;
        if (mean_b < mean_a) return 0.0;
        return 0.5;
      });
}

}  // namespace ambit
