#include "ambit/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ambit {

namespace {

using nlohmann::ordered_json;

ordered_json parse_or_fail(std::string_view text, const char* what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument(std::string("malformed JSON in ") + what);
  }
  return doc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ProblemFile parse_problem_json(std::string_view text) try {
  const ordered_json doc = parse_or_fail(text, "problem file");
  if (!doc.is_object() || !doc.contains("actions") || !doc.contains("states") ||
      !doc.contains("welfare")) {
    throw std::invalid_argument(
        "problem file requires 'actions', 'states', and 'welfare'");
  }
  std::vector<std::string> actions =
      doc.at("actions").get<std::vector<std::string>>();
  std::vector<std::string> states =
      doc.at("states").get<std::vector<std::string>>();
  const ordered_json& rows = doc.at("welfare");
  if (!rows.is_array() || rows.size() != actions.size()) {
    throw std::invalid_argument(
        "welfare must have one row per action");
  }
  std::vector<double> welfare;
  welfare.reserve(actions.size() * states.size());
  for (const ordered_json& row : rows) {
    if (!row.is_array() || row.size() != states.size()) {
      throw std::invalid_argument(
          "each welfare row must have one entry per state");
    }
    for (const ordered_json& cell : row) {
      welfare.push_back(cell.get<double>());
    }
  }
  ProblemFile out{DecisionProblem(std::move(actions), std::move(states),
                                  std::move(welfare)),
                  std::nullopt};
  if (doc.contains("prior")) {
    out.prior = Prior(doc.at("prior").get<std::vector<double>>());
  }
  return out;
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("problem file: ") + e.what());
}

ProblemFile load_problem(const std::string& path) {
  try {
    return parse_problem_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string problem_to_json(const DecisionProblem& problem,
                            const std::optional<Prior>& prior) {
  ordered_json doc;
  doc["actions"] = problem.actions();
  doc["states"] = problem.states();
  ordered_json rows = ordered_json::array();
  for (std::size_t a = 0; a < problem.action_count(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t s = 0; s < problem.state_count(); ++s) {
      row.push_back(problem.welfare(a, s));
    }
    rows.push_back(std::move(row));
  }
  doc["welfare"] = std::move(rows);
  if (prior) {
    doc["prior"] = prior->weights();
  }
  return doc.dump(2) + "\n";
}

std::vector<PriorPoint> parse_trial_prior_json(std::string_view text) try {
  const ordered_json doc = parse_or_fail(text, "prior file");
  if (!doc.is_object() || !doc.contains("support") ||
      !doc.at("support").is_array() || doc.at("support").empty()) {
    throw std::invalid_argument(
        "prior file requires a nonempty 'support' array");
  }
  std::vector<PriorPoint> support;
  for (const ordered_json& point : doc.at("support")) {
    support.push_back(PriorPoint{
        TrialState(point.at("p_a").get<double>(),
                   point.at("p_b").get<double>()),
        point.at("weight").get<double>()});
  }
  return support;
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("prior file: ") + e.what());
}

std::vector<PriorPoint> load_trial_prior(const std::string& path) {
  try {
    return parse_trial_prior_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Prior parse_prior_weights_json(std::string_view text) try {
  const ordered_json doc = parse_or_fail(text, "prior file");
  if (doc.is_array()) {
    return Prior(doc.get<std::vector<double>>());
  }
  if (doc.is_object() && doc.contains("prior")) {
    return Prior(doc.at("prior").get<std::vector<double>>());
  }
  throw std::invalid_argument(
      "prior file must be a JSON array or an object with a 'prior' member");
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("prior file: ") + e.what());
}

Prior load_prior_weights(const std::string& path) {
  try {
    return parse_prior_weights_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace ambit
