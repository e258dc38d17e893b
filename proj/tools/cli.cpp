#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ambit/bounds.hpp"
#include "ambit/csv.hpp"
#include "ambit/decide.hpp"
#include "ambit/interval.hpp"
#include "ambit/problem_io.hpp"
#include "ambit/report.hpp"
#include "ambit/wald.hpp"

namespace ambit::cli {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse '" + text + "' as " + what);
  }
  return value;
}

std::pair<double, double> parse_pair(const std::string& token,
                                     const std::string& what) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected '" + what +
                                "' as two comma-separated numbers, got '" +
                                token + "'");
  }
  return {parse_double(token.substr(0, comma), what),
          parse_double(token.substr(comma + 1), what)};
}

Interval parse_interval(const std::string& token, const std::string& what) {
  const auto [lo, hi] = parse_pair(token, what);
  return Interval(lo, hi);
}

OutcomeRange parse_range(const std::string& token) {
  const auto [lo, hi] = parse_pair(token, "range");
  return OutcomeRange(lo, hi);
}

void write_interval_fields(JsonWriter& w, const Interval& interval) {
  w.key("lo").value(interval.lo());
  w.key("hi").value(interval.hi());
}

void write_region(JsonWriter& w, const Region& region) {
  w.begin_object();
  w.key("empty").value(!region.has_value());
  if (region) write_interval_fields(w, *region);
  w.end_object();
}

void write_interval_pair(JsonWriter& w, const Interval& interval) {
  w.begin_array().value(interval.lo()).value(interval.hi()).end_array();
}

void emit_report(std::ostream& out, const std::string& command,
                 const std::vector<std::string>& input_files,
                 const std::function<void(JsonWriter&)>& write_results,
                 const std::vector<std::string>& diagnostics) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value(command);
  w.key("inputs_digest").value(digest_files(input_files));
  w.key("results");
  write_results(w);
  w.key("diagnostics").begin_array();
  for (const std::string& d : diagnostics) w.value(d);
  w.end_array();
  w.end_object();
  out << w.str() << "\n";
}

int emit_error(std::ostream& out, const std::string& command,
               const std::string& kind, const std::string& message, int code) {
  JsonWriter w;
  w.begin_object();
  w.key("error").begin_object();
  w.key("command").value(command);
  w.key("kind").value(kind);
  w.key("message").value(message);
  w.end_object();
  w.end_object();
  out << w.str() << "\n";
  return code;
}

std::string label_name(TreatmentLabel label) {
  return label == TreatmentLabel::kA ? "A" : "B";
}

struct ParsedRule {
  DecisionRule rule;
  std::vector<std::string> input_files;
};

ParsedRule parse_rule_spec(const std::string& spec) {
  if (spec == "es") {
    return {empirical_success_rule(), {}};
  }
  if (spec.rfind("test:", 0) == 0) {
    const double alpha = parse_double(spec.substr(5), "a test level");
    return {test_rule(alpha), {}};
  }
  if (spec.rfind("bayes:", 0) == 0) {
    const std::string path = spec.substr(6);
    return {bayes_rule(load_trial_prior(path)), {path}};
  }
  throw std::invalid_argument("unknown rule '" + spec +
                              "' (expected es, test:ALPHA, or bayes:FILE)");
}

bool try_parse_inline_weights(const std::string& text,
                              std::vector<double>& weights) {
  weights.clear();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    double value = 0.0;
    const char* begin = piece.data();
    const char* end = begin + piece.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return false;
    weights.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !weights.empty();
}

void write_rule_evaluation(JsonWriter& w, const RuleEvaluation& eval) {
  w.key("expected_welfare").value(eval.expected_welfare);
  w.key("error_probability").value(eval.error_probability);
  w.key("welfare_gap").value(eval.welfare_gap);
  w.key("regret").value(eval.regret);
}

// ---------------------------------------------------------------------------
// Subcommand configuration

struct IntersectConfig {
  std::vector<std::string> interval_tokens;
};

struct BoundsMissingConfig {
  std::string input;
  std::string outcome_col;
  std::string range_token = "0,1";
  std::string na_token = "NA";
  double threshold = 0.0;
  bool has_threshold = false;
};

struct BoundsTreatmentConfig {
  std::string input;
  std::string treatment_col;
  std::string outcome_col;
  std::string treatment;
  std::string compare;
  std::string iv_col;
  std::string range_token = "0,1";
};

struct DecideConfig {
  std::string problem_path;
  std::string criterion;
  std::string prior_spec;
};

struct AllocateConfig {
  std::string region_a_token;
  std::string region_b_token;
  double grid_step = 0.05;
};

struct WaldEvalConfig {
  int n_a = 0;
  int n_b = 0;
  std::string rule_spec;
  std::string state_token;
  std::uint64_t mc_replications = 0;
  bool use_mc = false;
  std::uint64_t seed = 0;
};

struct WaldMaxRegretConfig {
  int n_a = 0;
  int n_b = 0;
  std::string rule_spec;
  double grid_step = 0.05;
};

void run_intersect(const IntersectConfig& cfg, std::ostream& out) {
  std::vector<Interval> intervals;
  intervals.reserve(cfg.interval_tokens.size());
  for (const std::string& token : cfg.interval_tokens) {
    intervals.push_back(parse_interval(token, "interval"));
  }
  const Region result = intersect(intervals);
  std::vector<std::string> diagnostics;
  if (!result) {
    diagnostics.push_back(
        "empty intersection: the inputs are jointly incompatible");
  }
  emit_report(
      out, "intersect", {},
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("intervals").begin_array();
        for (const Interval& iv : intervals) write_interval_pair(w, iv);
        w.end_array();
        w.key("intersection");
        write_region(w, result);
        w.end_object();
      },
      diagnostics);
}

void run_bounds_missing(const BoundsMissingConfig& cfg, std::ostream& out) {
  MissingCsvOptions options;
  options.outcome_column = cfg.outcome_col;
  options.range = parse_range(cfg.range_token);
  options.na_tokens = {cfg.na_token};
  const MissingDataSet data = parse_missing_csv(cfg.input, options);

  std::vector<std::string> diagnostics;
  const BoundResult mean = mean_bound_missing(data);
  diagnostics.insert(diagnostics.end(), mean.diagnostics.begin(),
                     mean.diagnostics.end());

  std::optional<BoundResult> cdf;
  if (cfg.has_threshold) {
    cdf = cdf_bound(data, cfg.threshold);
    diagnostics.insert(diagnostics.end(), cdf->diagnostics.begin(),
                       cdf->diagnostics.end());
  }
  std::optional<double> mar;
  if (data.observed_count() > 0) {
    mar = mar_point(data);
  } else {
    diagnostics.push_back("MAR point undefined: no observed outcomes");
  }

  emit_report(
      out, "bounds missing", {cfg.input},
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("n").value(data.size());
        w.key("n_observed").value(data.observed_count());
        w.key("n_missing").value(data.missing_count());
        w.key("range").begin_array().value(data.range().min).value(
            data.range().max);
        w.end_array();
        w.key("mean_bound").begin_object();
        write_interval_fields(w, mean.interval);
        w.end_object();
        if (cdf) {
          w.key("cdf_bound").begin_object();
          w.key("threshold").value(cfg.threshold);
          write_interval_fields(w, cdf->interval);
          w.end_object();
        }
        if (mar) w.key("mar_point").value(*mar);
        w.end_object();
      },
      diagnostics);
}

void run_bounds_treatment(const BoundsTreatmentConfig& cfg, std::ostream& out) {
  TreatmentCsvOptions options;
  options.treatment_column = cfg.treatment_col;
  options.outcome_column = cfg.outcome_col;
  options.range = parse_range(cfg.range_token);
  if (!cfg.iv_col.empty()) options.group_column = cfg.iv_col;
  TreatmentDataSet data = parse_treatment_csv(cfg.input, options);

  // The requested treatments take part in the analysis even when no record
  // received them (the bound is then the logical range).
  std::vector<std::string> treatments = data.treatments();
  bool extended = false;
  for (const std::string& t : {cfg.treatment, cfg.compare}) {
    if (t.empty()) continue;
    if (std::find(treatments.begin(), treatments.end(), t) ==
        treatments.end()) {
      treatments.push_back(t);
      extended = true;
    }
  }
  if (extended) {
    data = TreatmentDataSet(data.records(), treatments, data.range());
  }

  std::vector<std::string> diagnostics;
  const BoundResult mean = mean_bound_treatment(data, cfg.treatment);
  diagnostics.insert(diagnostics.end(), mean.diagnostics.begin(),
                     mean.diagnostics.end());

  std::optional<double> mar;
  if (data.count_on(cfg.treatment) > 0) {
    mar = mar_point(data, cfg.treatment);
  } else {
    diagnostics.push_back("MAR point undefined: no records received '" +
                          cfg.treatment + "'");
  }

  std::optional<BoundResult> compare_mean;
  std::optional<BoundResult> effect;
  if (!cfg.compare.empty()) {
    compare_mean = mean_bound_treatment(data, cfg.compare);
    effect = ate_bound(data, cfg.treatment, cfg.compare);
    diagnostics.insert(diagnostics.end(), compare_mean->diagnostics.begin(),
                       compare_mean->diagnostics.end());
  }

  std::optional<IvIntersectionBound> iv;
  if (!cfg.iv_col.empty()) {
    iv = iv_intersection_bound(data, cfg.treatment);
    diagnostics.insert(diagnostics.end(), iv->diagnostics.begin(),
                       iv->diagnostics.end());
  }

  emit_report(
      out, "bounds treatment", {cfg.input},
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("n").value(data.size());
        w.key("treatment").value(cfg.treatment);
        w.key("n_treated").value(data.count_on(cfg.treatment));
        w.key("range").begin_array().value(data.range().min).value(
            data.range().max);
        w.end_array();
        w.key("mean_bound").begin_object();
        write_interval_fields(w, mean.interval);
        w.end_object();
        if (mar) w.key("mar_point").value(*mar);
        if (compare_mean) {
          w.key("compare_mean_bound").begin_object();
          w.key("treatment").value(cfg.compare);
          write_interval_fields(w, compare_mean->interval);
          w.end_object();
          w.key("effect_bound").begin_object();
          write_interval_fields(w, effect->interval);
          w.end_object();
        }
        if (iv) {
          w.key("iv").begin_object();
          w.key("column").value(cfg.iv_col);
          w.key("groups").begin_array();
          for (const GroupBound& g : iv->per_group) {
            w.begin_object();
            w.key("group").value(g.group);
            w.key("n").value(g.n_records);
            w.key("n_on_treatment").value(g.n_on_treatment);
            write_interval_fields(w, g.interval);
            w.end_object();
          }
          w.end_array();
          w.key("intersection");
          write_region(w, iv->combined);
          w.end_object();
        }
        w.end_object();
      },
      diagnostics);
}

void run_decide(const DecideConfig& cfg, std::ostream& out) {
  std::vector<std::string> input_files{cfg.problem_path};
  ProblemFile pf = load_problem(cfg.problem_path);

  std::optional<Prior> prior = pf.prior;
  if (!cfg.prior_spec.empty()) {
    std::vector<double> weights;
    if (try_parse_inline_weights(cfg.prior_spec, weights)) {
      prior = Prior(std::move(weights));
    } else {
      prior = load_prior_weights(cfg.prior_spec);
      input_files.push_back(cfg.prior_spec);
    }
  }

  Choice choice;
  if (cfg.criterion == "maximin") {
    choice = maximin(pf.problem);
  } else if (cfg.criterion == "minimax-regret") {
    choice = minimax_regret(pf.problem);
  } else {
    if (!prior) {
      throw std::invalid_argument(
          "bayes criterion requires a prior (problem file or --prior)");
    }
    choice = bayes(pf.problem, *prior);
  }

  const std::vector<std::size_t> dominated = dominated_actions(pf.problem);
  const std::vector<double> regrets = regret_table(pf.problem);

  emit_report(
      out, "decide", input_files,
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("criterion").value(cfg.criterion);
        w.key("actions").begin_array();
        for (const std::string& a : pf.problem.actions()) w.value(a);
        w.end_array();
        w.key("states").begin_array();
        for (const std::string& s : pf.problem.states()) w.value(s);
        w.end_array();
        w.key("chosen_action").value(choice.action);
        w.key("value").value(choice.value);
        if (cfg.criterion == "bayes") {
          w.key("prior").begin_array();
          for (double p : prior->weights()) w.value(p);
          w.end_array();
        }
        w.key("dominated_actions").begin_array();
        for (std::size_t a : dominated) w.value(pf.problem.actions()[a]);
        w.end_array();
        w.key("regret_table").begin_array();
        for (std::size_t a = 0; a < pf.problem.action_count(); ++a) {
          w.begin_array();
          for (std::size_t s = 0; s < pf.problem.state_count(); ++s) {
            w.value(regrets[a * pf.problem.state_count() + s]);
          }
          w.end_array();
        }
        w.end_array();
        w.end_object();
      },
      {});
}

void check_grid_step(double step, double max_step) {
  if (!(step >= 1e-3 && step <= max_step)) {
    throw std::invalid_argument("grid step must lie in [0.001, " +
                                format_number(max_step) + "]");
  }
}

void run_allocate(const AllocateConfig& cfg, std::ostream& out) {
  check_grid_step(cfg.grid_step, 1.0);
  const Interval region_a = parse_interval(cfg.region_a_token, "region-a");
  const Interval region_b = parse_interval(cfg.region_b_token, "region-b");

  const TreatmentLabel mm = two_treatment_choice(
      region_a, region_b, TwoTreatmentCriterion::kMaximin);
  const TreatmentLabel mr = two_treatment_choice(
      region_a, region_b, TwoTreatmentCriterion::kMinimaxRegret);
  const AllocationResult allocation = mmr_allocation(region_a, region_b);

  const DecisionProblem grid_problem =
      two_treatment_problem_grid(region_a, region_b, cfg.grid_step);
  const Choice grid_mm = maximin(grid_problem);
  const Choice grid_mr = minimax_regret(grid_problem);

  emit_report(
      out, "allocate", {},
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("region_a");
        write_interval_pair(w, region_a);
        w.key("region_b");
        write_interval_pair(w, region_b);
        w.key("maximin_choice").value(label_name(mm));
        w.key("minimax_regret_choice").value(label_name(mr));
        w.key("allocation").begin_object();
        w.key("fraction_b").value(allocation.allocation.fraction_b);
        w.key("max_regret").value(allocation.max_regret);
        w.end_object();
        w.key("grid").begin_object();
        w.key("step").value(cfg.grid_step);
        w.key("maximin_choice").value(grid_mm.action);
        w.key("minimax_regret_choice").value(grid_mr.action);
        w.end_object();
        w.end_object();
      },
      {});
}

void run_wald_eval(const WaldEvalConfig& cfg, std::ostream& out) {
  const TrialDesign design(cfg.n_a, cfg.n_b);
  const auto [p_a, p_b] = parse_pair(cfg.state_token, "state");
  const TrialState state(p_a, p_b);
  ParsedRule parsed = parse_rule_spec(cfg.rule_spec);

  std::vector<std::string> diagnostics;
  if (cfg.use_mc) {
    diagnostics.push_back("Monte Carlo mode engaged");
  }

  emit_report(
      out, "wald eval", parsed.input_files,
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("design").begin_object();
        w.key("n_a").value(design.n_a);
        w.key("n_b").value(design.n_b);
        w.end_object();
        w.key("rule").value(parsed.rule.name());
        w.key("state").begin_object();
        w.key("p_a").value(state.p_a);
        w.key("p_b").value(state.p_b);
        w.end_object();
        if (cfg.use_mc) {
          const RuleEvaluationMc mc = evaluate_rule_mc(
              parsed.rule, state, design, cfg.mc_replications, cfg.seed);
          w.key("mode").value("mc");
          w.key("replications").value(mc.replications);
          w.key("seed").value(mc.seed);
          w.key("evaluation").begin_object();
          write_rule_evaluation(w, mc.evaluation);
          w.key("welfare_se").value(mc.welfare_se);
          w.key("error_probability_se").value(mc.error_probability_se);
          w.end_object();
        } else {
          const RuleEvaluation eval = evaluate_rule(parsed.rule, state, design);
          w.key("mode").value("exact");
          w.key("evaluation").begin_object();
          write_rule_evaluation(w, eval);
          w.end_object();
        }
        w.end_object();
      },
      diagnostics);
}

void run_wald_max_regret(const WaldMaxRegretConfig& cfg, std::ostream& out) {
  check_grid_step(cfg.grid_step, 0.5);
  const TrialDesign design(cfg.n_a, cfg.n_b);
  ParsedRule parsed = parse_rule_spec(cfg.rule_spec);
  const MaxRegretResult result =
      max_regret(parsed.rule, design, cfg.grid_step);

  emit_report(
      out, "wald max-regret", parsed.input_files,
      [&](JsonWriter& w) {
        w.begin_object();
        w.key("design").begin_object();
        w.key("n_a").value(design.n_a);
        w.key("n_b").value(design.n_b);
        w.end_object();
        w.key("rule").value(parsed.rule.name());
        w.key("grid_step").value(cfg.grid_step);
        w.key("max_regret").value(result.value);
        w.key("argmax_state").begin_object();
        w.key("p_a").value(result.argmax.p_a);
        w.key("p_b").value(result.argmax.p_b);
        w.end_object();
        w.end_object();
      },
      {});
}

std::string active_command(const CLI::App& app,
                           const std::vector<std::string>& args) {
  std::string name;
  const CLI::App* current = &app;
  while (true) {
    const auto subs = current->get_subcommands();
    if (subs.empty()) break;
    if (!name.empty()) name += ' ';
    name += subs.front()->get_name();
    current = subs.front();
  }
  if (name.empty() && !args.empty()) name = args.front();
  return name;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Identification bounds and decisions under ambiguity"};
  app.name("ambit");
  app.require_subcommand(1);

  // --- intersect ---
  auto intersect_cfg = std::make_shared<IntersectConfig>();
  CLI::App* cmd_intersect = app.add_subcommand(
      "intersect", "Intersect identification intervals");
  cmd_intersect
      ->add_option("--intervals", intersect_cfg->interval_tokens,
                   "Intervals as lo,hi")
      ->required()
      ->expected(-1);
  cmd_intersect->callback([intersect_cfg, &out] {
    run_intersect(*intersect_cfg, out);
  });

  // --- bounds ---
  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "Identification bounds from sample data");
  cmd_bounds->require_subcommand(1);

  auto missing_cfg = std::make_shared<BoundsMissingConfig>();
  CLI::App* cmd_missing = cmd_bounds->add_subcommand(
      "missing", "Bounds under missing outcome data");
  cmd_missing->add_option("--input", missing_cfg->input, "CSV file")
      ->required();
  cmd_missing
      ->add_option("--outcome-col", missing_cfg->outcome_col,
                   "Outcome column name")
      ->required();
  cmd_missing->add_option("--range", missing_cfg->range_token,
                          "Outcome range as min,max (default 0,1)");
  CLI::Option* threshold_opt = cmd_missing->add_option(
      "--threshold", missing_cfg->threshold,
      "Also bound P(outcome <= threshold)");
  cmd_missing->add_option("--na-token", missing_cfg->na_token,
                          "Missing-value token besides the empty cell");
  cmd_missing->callback([missing_cfg, threshold_opt, &out] {
    missing_cfg->has_threshold = threshold_opt->count() > 0;
    run_bounds_missing(*missing_cfg, out);
  });

  auto treatment_cfg = std::make_shared<BoundsTreatmentConfig>();
  CLI::App* cmd_treatment = cmd_bounds->add_subcommand(
      "treatment", "Bounds on mean treatment response");
  cmd_treatment->add_option("--input", treatment_cfg->input, "CSV file")
      ->required();
  cmd_treatment
      ->add_option("--treatment-col", treatment_cfg->treatment_col,
                   "Treatment column name")
      ->required();
  cmd_treatment
      ->add_option("--outcome-col", treatment_cfg->outcome_col,
                   "Outcome column name")
      ->required();
  cmd_treatment
      ->add_option("--treatment", treatment_cfg->treatment,
                   "Treatment of interest")
      ->required();
  cmd_treatment->add_option("--compare", treatment_cfg->compare,
                            "Also bound the effect versus this treatment");
  cmd_treatment->add_option("--iv-col", treatment_cfg->iv_col,
                            "Group column for intersection bounds");
  cmd_treatment->add_option("--range", treatment_cfg->range_token,
                            "Outcome range as min,max (default 0,1)");
  cmd_treatment->callback([treatment_cfg, &out] {
    run_bounds_treatment(*treatment_cfg, out);
  });

  // --- decide ---
  auto decide_cfg = std::make_shared<DecideConfig>();
  CLI::App* cmd_decide = app.add_subcommand(
      "decide", "Choose an action for a finite decision problem");
  cmd_decide->add_option("--problem", decide_cfg->problem_path,
                         "Problem JSON file")
      ->required();
  cmd_decide
      ->add_option("--criterion", decide_cfg->criterion,
                   "maximin, minimax-regret, or bayes")
      ->required()
      ->check(CLI::IsMember({"maximin", "minimax-regret", "bayes"}));
  cmd_decide->add_option("--prior", decide_cfg->prior_spec,
                         "Prior weights, inline (w1,w2,...) or a JSON file");
  cmd_decide->callback([decide_cfg, &out] { run_decide(*decide_cfg, out); });

  // --- allocate ---
  auto allocate_cfg = std::make_shared<AllocateConfig>();
  CLI::App* cmd_allocate = app.add_subcommand(
      "allocate", "Two-treatment choice and minimax-regret allocation");
  cmd_allocate
      ->add_option("--region-a", allocate_cfg->region_a_token,
                   "Identification region for treatment A as lo,hi")
      ->required();
  cmd_allocate
      ->add_option("--region-b", allocate_cfg->region_b_token,
                   "Identification region for treatment B as lo,hi")
      ->required();
  cmd_allocate->add_option("--grid", allocate_cfg->grid_step,
                           "State grid step for the discretized check");
  cmd_allocate->callback([allocate_cfg, &out] {
    run_allocate(*allocate_cfg, out);
  });

  // --- wald ---
  CLI::App* cmd_wald = app.add_subcommand(
      "wald", "Evaluate statistical decision rules for two-arm trials");
  cmd_wald->require_subcommand(1);

  auto eval_cfg = std::make_shared<WaldEvalConfig>();
  CLI::App* cmd_eval = cmd_wald->add_subcommand(
      "eval", "Evaluate a rule in one state");
  cmd_eval->add_option("--n-a", eval_cfg->n_a, "Subjects on arm A")
      ->required();
  cmd_eval->add_option("--n-b", eval_cfg->n_b, "Subjects on arm B")
      ->required();
  cmd_eval
      ->add_option("--rule", eval_cfg->rule_spec,
                   "es, test:ALPHA, or bayes:FILE")
      ->required();
  cmd_eval->add_option("--state", eval_cfg->state_token, "State as pa,pb")
      ->required();
  CLI::Option* mc_opt = cmd_eval->add_option(
      "--mc", eval_cfg->mc_replications,
      "Monte Carlo replications (default: exact enumeration)");
  cmd_eval->add_option("--seed", eval_cfg->seed, "Monte Carlo seed");
  cmd_eval->callback([eval_cfg, mc_opt, &out] {
    eval_cfg->use_mc = mc_opt->count() > 0;
    run_wald_eval(*eval_cfg, out);
  });

  auto mr_cfg = std::make_shared<WaldMaxRegretConfig>();
  CLI::App* cmd_mr = cmd_wald->add_subcommand(
      "max-regret", "Maximum regret over a state grid");
  cmd_mr->add_option("--n-a", mr_cfg->n_a, "Subjects on arm A")->required();
  cmd_mr->add_option("--n-b", mr_cfg->n_b, "Subjects on arm B")->required();
  cmd_mr->add_option("--rule", mr_cfg->rule_spec,
                     "es, test:ALPHA, or bayes:FILE")
      ->required();
  cmd_mr->add_option("--grid", mr_cfg->grid_step, "State grid step");
  cmd_mr->callback([mr_cfg, &out] { run_wald_max_regret(*mr_cfg, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, active_command(app, args), "usage", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return emit_error(out, active_command(app, args), "data", e.what(), 1);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return emit_error(out, active_command(app, args), "internal", e.what(), 1);
  }
}

}  // namespace ambit::cli
