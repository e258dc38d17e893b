#pragma once

#include <string>
#include <vector>

#include "ambit/data.hpp"
#include "ambit/interval.hpp"

namespace ambit {

/// A sharp identification interval plus any diagnostics raised while
/// computing it (e.g. "no observed outcomes, logical range applies").
struct BoundResult {
  Interval interval;
  std::vector<std::string> diagnostics;

  bool degenerate() const { return !diagnostics.empty(); }
};

/// Agnostic bound computed within one instrument group.
struct GroupBound {
  std::string group;
  std::size_t n_records = 0;
  std::size_t n_on_treatment = 0;
  Interval interval;
};

/// Result of intersecting per-group agnostic bounds under the assumption of
/// a common mean response across groups. An empty `combined` region means
/// the data jointly refute that assumption.
struct IvIntersectionBound {
  Region combined;
  std::vector<GroupBound> per_group;
  std::vector<std::string> diagnostics;
};

/// Sharp bound on P(outcome <= threshold) under no assumptions about the
/// missingness process. The lower endpoint counts only observed outcomes at
/// or below the threshold; the upper endpoint additionally counts every
/// missing record. Width equals the sample missing fraction exactly.
/// With zero observed records the logical range [0, 1] is returned together
/// with a diagnostic.
BoundResult cdf_bound(const MissingDataSet& data, double threshold);

/// Sharp bound on the mean outcome: the lower (upper) endpoint imputes every
/// missing outcome at range.min (range.max). Width equals the missing
/// fraction times the range span.
BoundResult mean_bound_missing(const MissingDataSet& data);

/// Sharp bound on the mean outcome under treatment `t` when only records
/// that received `t` reveal it. Counterfactual records are imputed at the
/// range endpoints; in range-rescaled units the width equals the fraction of
/// records not on `t`. With zero records on `t` the logical range is
/// returned together with a diagnostic.
BoundResult mean_bound_treatment(const TreatmentDataSet& data,
                                 const std::string& t);

/// Bound on the average effect of `t` versus `u`: the interval difference of
/// the two one-treatment bounds, which is sharp because each record's
/// counterfactual outcomes under `t` and `u` vary independently.
BoundResult ate_bound(const TreatmentDataSet& data, const std::string& t,
                      const std::string& u);

/// Per-group agnostic bounds on mean response to `t`, intersected under the
/// assumption that every group shares the same mean response. Requires every
/// record to carry a group label. Groups with no records on `t` contribute
/// the logical range (uninformative, harmless).
IvIntersectionBound iv_intersection_bound(const TreatmentDataSet& data,
                                          const std::string& t);

/// Point identification under the missing-at-random assumption: the mean of
/// the observed outcomes. Throws when no outcome is observed.
double mar_point(const MissingDataSet& data);

/// Point identification of mean response to `t` under the assumption that
/// counterfactual response equals observed response: the mean outcome among
/// records that received `t`. Throws when no record received `t`.
double mar_point(const TreatmentDataSet& data, const std::string& t);

}  // namespace ambit
