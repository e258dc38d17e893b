#include "ambit/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ambit {

namespace {

// Rescales y from [range.min, range.max] to [0, 1].
double to_unit(double y, const OutcomeRange& range) {
  return (y - range.min) / range.span();
}

double from_unit(double u, const OutcomeRange& range) {
  return range.min + u * range.span();
}

}  // namespace

BoundResult cdf_bound(const MissingDataSet& data, double threshold) {
  const double n = static_cast<double>(data.size());
  std::size_t at_or_below = 0;
  for (const MissingDataRecord& r : data.records()) {
    if (r.outcome && *r.outcome <= threshold) ++at_or_below;
  }
  if (data.observed_count() == 0) {
    return {Interval(0.0, 1.0),
            {"no observed outcomes: conditional term undefined, logical range "
             "[0, 1] applies"}};
  }
  // Single divisions keep both endpoints within [0, 1] and the width equal
  // to the missing fraction up to one rounding each.
  const double lo = static_cast<double>(at_or_below) / n;
  const double hi = static_cast<double>(at_or_below + data.missing_count()) / n;
  return {Interval(lo, hi), {}};
}

BoundResult mean_bound_missing(const MissingDataSet& data) {
  const double n = static_cast<double>(data.size());
  const double m = static_cast<double>(data.missing_count());
  double observed_sum = 0.0;
  for (const MissingDataRecord& r : data.records()) {
    if (r.outcome) observed_sum += *r.outcome;
  }
  const double lo = (observed_sum + m * data.range().min) / n;
  const double hi = (observed_sum + m * data.range().max) / n;
  return {Interval(lo, hi), {}};
}

BoundResult mean_bound_treatment(const TreatmentDataSet& data,
                                 const std::string& t) {
  if (!data.has_treatment(t)) {
    throw std::invalid_argument("treatment '" + t + "' not in treatment list");
  }
  const double n = static_cast<double>(data.size());
  std::size_t on_t = 0;
  double unit_sum = 0.0;
  for (const TreatmentRecord& r : data.records()) {
    if (r.treatment != t) continue;
    ++on_t;
    unit_sum += to_unit(r.outcome, data.range());
  }
  if (on_t == 0) {
    return {Interval(data.range().min, data.range().max),
            {"no records received treatment '" + t +
             "': logical range applies"}};
  }
  const double off_t = n - static_cast<double>(on_t);
  const double lo_u = unit_sum / n;
  const double hi_u = (unit_sum + off_t) / n;
  return {Interval(from_unit(lo_u, data.range()), from_unit(hi_u, data.range())),
          {}};
}

BoundResult ate_bound(const TreatmentDataSet& data, const std::string& t,
                      const std::string& u) {
  if (t == u) {
    throw std::invalid_argument("effect bound requires two distinct treatments");
  }
  BoundResult bt = mean_bound_treatment(data, t);
  BoundResult bu = mean_bound_treatment(data, u);
  std::vector<std::string> diagnostics = std::move(bt.diagnostics);
  diagnostics.insert(diagnostics.end(), bu.diagnostics.begin(),
                     bu.diagnostics.end());
  return {interval_difference(bt.interval, bu.interval), std::move(diagnostics)};
}

IvIntersectionBound iv_intersection_bound(const TreatmentDataSet& data,
                                          const std::string& t) {
  if (!data.all_records_grouped()) {
    throw std::invalid_argument(
        "instrument analysis requires a group label on every record");
  }
  IvIntersectionBound out;
  std::vector<Interval> intervals;
  for (const std::string& group : data.groups()) {
    std::vector<TreatmentRecord> sub;
    for (const TreatmentRecord& r : data.records()) {
      if (*r.group == group) sub.push_back(r);
    }
    TreatmentDataSet subset(std::move(sub), data.treatments(), data.range());
    BoundResult bound = mean_bound_treatment(subset, t);
    if (bound.degenerate()) {
      out.diagnostics.push_back("group '" + group +
                                "': no records on treatment '" + t +
                                "', contributes the logical range");
    }
    out.per_group.push_back(GroupBound{group, subset.size(),
                                       subset.count_on(t), bound.interval});
    intervals.push_back(bound.interval);
  }
  out.combined = intersect(intervals);
  if (!out.combined) {
    out.diagnostics.push_back(
        "empty intersection: the common-mean-response assumption is refuted "
        "by the data");
  }
  return out;
}

double mar_point(const MissingDataSet& data) {
  if (data.observed_count() == 0) {
    throw std::invalid_argument(
        "MAR point undefined: no observed outcomes");
  }
  double sum = 0.0;
  for (const MissingDataRecord& r : data.records()) {
    if (r.outcome) sum += *r.outcome;
  }
  return sum / static_cast<double>(data.observed_count());
}

double mar_point(const TreatmentDataSet& data, const std::string& t) {
  if (!data.has_treatment(t)) {
    throw std::invalid_argument("treatment '" + t + "' not in treatment list");
  }
  std::size_t on_t = 0;
  double sum = 0.0;
  for (const TreatmentRecord& r : data.records()) {
    if (r.treatment != t) continue;
    ++on_t;
    sum += r.outcome;
  }
  if (on_t == 0) {
    throw std::invalid_argument("MAR point undefined: no records received '" +
                                t + "'");
  }
  return sum / static_cast<double>(on_t);
}

}  // namespace ambit
