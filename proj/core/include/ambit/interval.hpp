#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ambit {

/// Absolute tolerance for emptiness and containment comparisons. Inputs are
/// ratios of sample counts or user-entered decimals, far above this scale.
inline constexpr double kRegionTol = 1e-9;

/// A closed interval [lo, hi] housing a partially identified scalar: a bound
/// on a mean, a CDF value, or a treatment effect. Degenerate point intervals
/// (lo == hi) are valid and denote point identification. Empty regions are
/// never represented here; see Region below.
class Interval {
 public:
  Interval(double lo, double hi);

  static Interval point(double value) { return Interval(value, value); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(double x, double tol = kRegionTol) const {
    return x >= lo_ - tol && x <= hi_ + tol;
  }

  /// Superset test: does this interval contain all of `other`?
  bool contains(const Interval& other, double tol = kRegionTol) const {
    return other.lo_ >= lo_ - tol && other.hi_ <= hi_ + tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// A possibly-empty identification region. An empty region is a substantive
/// finding (the maintained assumptions are jointly refuted by the data), so
/// it is a value, not an error.
using Region = std::optional<Interval>;

/// Intersection of closed intervals: [max of lo's, min of hi's], or an empty
/// region when the los and his cross by more than kRegionTol.
/// Throws std::invalid_argument on an empty input list.
Region intersect(std::span<const Interval> intervals);
Region intersect(std::initializer_list<Interval> intervals);

/// Interval housing {d1 - d2 : d1 in a, d2 in b}: [a.lo - b.hi, a.hi - b.lo].
Interval interval_difference(const Interval& a, const Interval& b);

}  // namespace ambit
