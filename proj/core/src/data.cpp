#include "ambit/data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ambit {

OutcomeRange::OutcomeRange(double min, double max) : min(min), max(max) {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument(
        "outcome range must be finite: agnostic bounds on an unbounded "
        "outcome are uninformative");
  }
  if (!(min < max)) {
    throw std::invalid_argument("outcome range requires min < max");
  }
}

MissingDataSet::MissingDataSet(std::vector<MissingDataRecord> records,
                               OutcomeRange range)
    : records_(std::move(records)), range_(range), observed_count_(0) {
  if (records_.empty()) {
    throw std::invalid_argument("missing-data sample must be nonempty");
  }
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& y = records_[i].outcome;
    if (!y.has_value()) continue;
    if (!std::isfinite(*y) || !range_.contains(*y)) {
      throw std::invalid_argument("record " + std::to_string(i + 1) +
                                  ": outcome " + std::to_string(*y) +
                                  " outside range [" + std::to_string(range_.min) +
                                  ", " + std::to_string(range_.max) + "]");
    }
    ++observed_count_;
  }
}

TreatmentDataSet::TreatmentDataSet(std::vector<TreatmentRecord> records,
                                   std::vector<std::string> treatments,
                                   OutcomeRange range)
    : records_(std::move(records)),
      treatments_(std::move(treatments)),
      range_(range) {
  if (records_.empty()) {
    throw std::invalid_argument("treatment sample must be nonempty");
  }
  if (treatments_.empty()) {
    throw std::invalid_argument("treatment list must be nonempty");
  }
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const TreatmentRecord& r = records_[i];
    if (!has_treatment(r.treatment)) {
      throw std::invalid_argument("record " + std::to_string(i + 1) +
                                  ": treatment '" + r.treatment +
                                  "' not in treatment list");
    }
    if (!std::isfinite(r.outcome) || !range_.contains(r.outcome)) {
      throw std::invalid_argument("record " + std::to_string(i + 1) +
                                  ": outcome " + std::to_string(r.outcome) +
                                  " outside range [" + std::to_string(range_.min) +
                                  ", " + std::to_string(range_.max) + "]");
    }
  }
}

std::vector<std::string> TreatmentDataSet::infer_treatments(
    const std::vector<TreatmentRecord>& records) {
  std::vector<std::string> out;
  for (const TreatmentRecord& r : records) {
    if (std::find(out.begin(), out.end(), r.treatment) == out.end()) {
      out.push_back(r.treatment);
    }
  }
  return out;
}

std::size_t TreatmentDataSet::count_on(const std::string& treatment) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [&](const TreatmentRecord& r) { return r.treatment == treatment; }));
}

bool TreatmentDataSet::has_treatment(const std::string& treatment) const {
  return std::find(treatments_.begin(), treatments_.end(), treatment) !=
         treatments_.end();
}

bool TreatmentDataSet::all_records_grouped() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const TreatmentRecord& r) { return r.group.has_value(); });
}

std::vector<std::string> TreatmentDataSet::groups() const {
  std::vector<std::string> out;
  for (const TreatmentRecord& r : records_) {
    if (!r.group) continue;
    if (std::find(out.begin(), out.end(), *r.group) == out.end()) {
      out.push_back(*r.group);
    }
  }
  return out;
}

}  // namespace ambit
