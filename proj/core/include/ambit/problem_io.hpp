#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambit/decide.hpp"
#include "ambit/wald.hpp"

namespace ambit {

/// A decision problem as stored on disk, with its optional prior.
struct ProblemFile {
  DecisionProblem problem;
  std::optional<Prior> prior;
};

/// Parses a problem document: {"actions": [...], "states": [...],
/// "welfare": [[...], ...] (row-major, actions x states),
/// "prior": [...] (optional)}.
ProblemFile parse_problem_json(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Serializes a problem (and optional prior) to the same schema. Values
/// round-trip exactly: parse(problem_to_json(p)) == p.
std::string problem_to_json(const DecisionProblem& problem,
                            const std::optional<Prior>& prior);

/// Parses a finite-support prior over trial states:
/// {"support": [{"p_a": .., "p_b": .., "weight": ..}, ...]}.
std::vector<PriorPoint> parse_trial_prior_json(std::string_view text);
std::vector<PriorPoint> load_trial_prior(const std::string& path);

/// Parses state-space prior weights from either a bare JSON array or an
/// object with a "prior" member.
Prior parse_prior_weights_json(std::string_view text);
Prior load_prior_weights(const std::string& path);

}  // namespace ambit
