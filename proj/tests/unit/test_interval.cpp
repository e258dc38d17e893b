#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "ambit/interval.hpp"
#include "support/generators.hpp"

using namespace ambit;

TEST_CASE("interval construction validates endpoints") {
  CHECK_THROWS_AS(Interval(0.7, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  const Interval point = Interval::point(0.5);
  CHECK(point.is_point());
  CHECK(point.width() == 0.0);
}

TEST_CASE("intersection of the three clinician-style intervals") {
  const Region result =
      intersect({Interval(0.4, 0.7), Interval(0.2, 0.6), Interval(0.5, 1.0)});
  REQUIRE(result.has_value());
  CHECK(result->lo() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(result->hi() == doctest::Approx(0.6).epsilon(1e-12));

  // The first interval is redundant: the result is determined entirely by
  // the second and third.
  const Region without_first =
      intersect({Interval(0.2, 0.6), Interval(0.5, 1.0)});
  REQUIRE(without_first.has_value());
  CHECK(*without_first == *result);
}

TEST_CASE("intersection identity and disjoint cases") {
  const Region identity = intersect({Interval(0.0, 1.0)});
  REQUIRE(identity.has_value());
  CHECK(*identity == Interval(0.0, 1.0));

  CHECK_FALSE(intersect({Interval(0.0, 0.4), Interval(0.6, 1.0)}).has_value());
  CHECK_THROWS_AS(intersect(std::span<const Interval>{}), std::invalid_argument);
}

TEST_CASE("intersection emptiness tolerance") {
  // Crossing by less than the tolerance still counts as touching.
  CHECK(intersect({Interval(0.0, 0.5), Interval(0.5 + 1e-10, 1.0)}).has_value());
  CHECK_FALSE(
      intersect({Interval(0.0, 0.5), Interval(0.5 + 1e-8, 1.0)}).has_value());
}

TEST_CASE("intersection is order-invariant, shrinking, and subset of inputs") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> count_dist(1, 6);
    std::vector<Interval> intervals;
    for (std::size_t i = 0; i < count_dist(rng); ++i) {
      intervals.push_back(testing::random_subinterval(rng));
    }
    const Region result = intersect(intervals);

    std::vector<Interval> shuffled = intervals;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Region shuffled_result = intersect(shuffled);
    CHECK(result == shuffled_result);

    if (result) {
      for (const Interval& input : intervals) {
        CHECK(input.contains(*result));
      }
    }

    // Adding one more interval never widens the result.
    std::vector<Interval> extended = intervals;
    extended.push_back(testing::random_subinterval(rng));
    const Region narrowed = intersect(extended);
    if (narrowed) {
      REQUIRE(result.has_value());
      CHECK(result->contains(*narrowed));
    }
  }
}

TEST_CASE("interval difference worked values") {
  const Interval self = interval_difference(Interval(0.3, 0.9), Interval(0.3, 0.9));
  CHECK(self.lo() == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK(self.hi() == doctest::Approx(0.6).epsilon(1e-12));

  const Interval points =
      interval_difference(Interval::point(0.5), Interval::point(0.2));
  CHECK(points.lo() == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(points.hi() == doctest::Approx(0.3).epsilon(1e-12));

  const Interval mixed = interval_difference(Interval(0.3, 0.9), Interval(0.1, 0.4));
  CHECK(mixed.lo() == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(mixed.hi() == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("interval difference contains every pairwise difference") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Interval a = testing::random_subinterval(rng);
    const Interval b = testing::random_subinterval(rng);
    const Interval diff = interval_difference(a, b);
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double d1 = a.lo() + a.width() * i / 20.0;
        const double d2 = b.lo() + b.width() * j / 20.0;
        CHECK(diff.contains(d1 - d2));
      }
    }
  }
}
