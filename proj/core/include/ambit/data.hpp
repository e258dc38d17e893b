#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ambit {

/// Logical range of an outcome variable. Must be a proper finite interval:
/// bounds on an unbounded outcome are uninformative, so unbounded ranges are
/// rejected at construction.
struct OutcomeRange {
  OutcomeRange(double min, double max);

  double min;
  double max;

  double span() const { return max - min; }
  bool contains(double y) const { return y >= min && y <= max; }
};

/// One sampled unit. An absent outcome means the value is missing; sentinel
/// numerics are never used.
struct MissingDataRecord {
  std::optional<double> outcome;
};

/// Sample of outcomes with possibly-missing values, the sample analog of an
/// outcome distribution observed through an observability indicator.
class MissingDataSet {
 public:
  MissingDataSet(std::vector<MissingDataRecord> records, OutcomeRange range);

  const std::vector<MissingDataRecord>& records() const { return records_; }
  const OutcomeRange& range() const { return range_; }

  std::size_t size() const { return records_.size(); }
  std::size_t observed_count() const { return observed_count_; }
  std::size_t missing_count() const { return records_.size() - observed_count_; }

 private:
  std::vector<MissingDataRecord> records_;
  OutcomeRange range_;
  std::size_t observed_count_;
};

/// One sampled unit of a treatment study: the treatment actually received,
/// the realized outcome under that treatment, and an optional group label
/// used as an instrumental variable.
struct TreatmentRecord {
  std::string treatment;
  double outcome = 0.0;
  std::optional<std::string> group;
};

/// Sample of (treatment, outcome, optional group) records. Outcomes under
/// treatments a unit did not receive are counterfactual and absent by
/// construction.
class TreatmentDataSet {
 public:
  /// `treatments` lists the feasible treatment identifiers; every record's
  /// treatment must appear in it. Use infer_treatments to build the list
  /// from the data in order of first appearance.
  TreatmentDataSet(std::vector<TreatmentRecord> records,
                   std::vector<std::string> treatments, OutcomeRange range);

  static std::vector<std::string> infer_treatments(
      const std::vector<TreatmentRecord>& records);

  const std::vector<TreatmentRecord>& records() const { return records_; }
  const std::vector<std::string>& treatments() const { return treatments_; }
  const OutcomeRange& range() const { return range_; }

  std::size_t size() const { return records_.size(); }
  std::size_t count_on(const std::string& treatment) const;
  bool has_treatment(const std::string& treatment) const;
  bool all_records_grouped() const;

  /// Group labels in order of first appearance (records without a group are
  /// ignored).
  std::vector<std::string> groups() const;

 private:
  std::vector<TreatmentRecord> records_;
  std::vector<std::string> treatments_;
  OutcomeRange range_;
};

}  // namespace ambit
