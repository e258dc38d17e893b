#include "ambit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ambit {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("interval endpoints must be finite");
  }
  if (lo > hi) {
    throw std::invalid_argument("interval requires lo <= hi, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "]");
  }
}

Region intersect(std::span<const Interval> intervals) {
  if (intervals.empty()) {
    throw std::invalid_argument("intersect requires at least one interval");
  }
  double lo = intervals.front().lo();
  double hi = intervals.front().hi();
  for (const Interval& iv : intervals.subspan(1)) {
    lo = std::max(lo, iv.lo());
    hi = std::min(hi, iv.hi());
  }
  if (lo > hi + kRegionTol) return std::nullopt;
  // A crossing within tolerance collapses to a point at the larger lo.
  return Interval(lo, std::max(lo, hi));
}

Region intersect(std::initializer_list<Interval> intervals) {
  return intersect(std::span<const Interval>(intervals.begin(), intervals.size()));
}

Interval interval_difference(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

}  // namespace ambit
