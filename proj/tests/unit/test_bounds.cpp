#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ambit/bounds.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ambit;

namespace {

MissingDataSet make_missing(std::vector<std::optional<double>> outcomes,
                            OutcomeRange range = {0.0, 1.0}) {
  std::vector<MissingDataRecord> records;
  for (auto& y : outcomes) records.push_back(MissingDataRecord{y});
  return MissingDataSet(std::move(records), range);
}

TreatmentRecord rec(std::string t, double y,
                    std::optional<std::string> g = std::nullopt) {
  return TreatmentRecord{std::move(t), y, std::move(g)};
}

constexpr double kExact = 1e-12;

}  // namespace

TEST_CASE("outcome range rejects unbounded or inverted limits") {
  CHECK_THROWS_AS(OutcomeRange(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(OutcomeRange(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(OutcomeRange(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("dataset validation") {
  CHECK_THROWS_AS(make_missing({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_missing({}), std::invalid_argument);
  CHECK_THROWS_AS(TreatmentDataSet({rec("t", 0.5)}, {"u"}, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TreatmentDataSet({rec("t", 2.0)}, {"t"}, {0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("cdf bound: 6 of 10 observed, 3 at or below threshold") {
  const auto data = make_missing({0.1, 0.2, 0.3, 0.8, 0.9, 0.7,
                                  std::nullopt, std::nullopt, std::nullopt,
                                  std::nullopt});
  const BoundResult bound = cdf_bound(data, 0.5);
  CHECK(std::abs(bound.interval.lo() - 0.3) < kExact);
  CHECK(std::abs(bound.interval.hi() - 0.7) < kExact);
  CHECK(bound.diagnostics.empty());
  // Width is exactly the missing fraction.
  CHECK(std::abs(bound.interval.width() - 0.4) < kExact);
}

TEST_CASE("cdf bound: fully observed data point-identifies") {
  const auto data =
      make_missing({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
  const BoundResult bound = cdf_bound(data, 0.5);
  CHECK(bound.interval.lo() == bound.interval.hi());
  CHECK(std::abs(bound.interval.lo() - 0.5) < kExact);
}

TEST_CASE("cdf bound: no observed outcomes yields the logical range") {
  const auto data = make_missing({std::nullopt, std::nullopt});
  const BoundResult bound = cdf_bound(data, 0.5);
  CHECK(bound.interval == Interval(0.0, 1.0));
  CHECK(bound.degenerate());
}

TEST_CASE("cdf bound threshold edges") {
  const auto observed = make_missing({0.1, 0.5, 0.9});
  CHECK(cdf_bound(observed, 1.0).interval == Interval(1.0, 1.0));

  const auto with_missing = make_missing({0.4, std::nullopt, std::nullopt, 0.6});
  const BoundResult below = cdf_bound(with_missing, -0.5);
  CHECK(below.interval.lo() == 0.0);
  CHECK(std::abs(below.interval.hi() - 0.5) < kExact);
}

TEST_CASE("mean bound with missing outcomes: worked values") {
  const auto data = make_missing({1.0, 1.0, 1.0, std::nullopt, std::nullopt});
  const BoundResult bound = mean_bound_missing(data);
  CHECK(std::abs(bound.interval.lo() - 0.6) < kExact);
  CHECK(std::abs(bound.interval.hi() - 1.0) < kExact);

  const auto complete = make_missing({0.2, 0.4, 0.6});
  const BoundResult point = mean_bound_missing(complete);
  CHECK(point.interval.is_point());
  CHECK(std::abs(point.interval.lo() - 0.4) < kExact);

  const auto all_missing = make_missing({std::nullopt, std::nullopt});
  CHECK(mean_bound_missing(all_missing).interval == Interval(0.0, 1.0));
}

TEST_CASE("mar point: observed-case mean, nested in the agnostic bound") {
  const auto data = make_missing({1.0, 1.0, 1.0, std::nullopt, std::nullopt});
  CHECK(mar_point(data) == doctest::Approx(1.0));

  const auto complete = make_missing({0.25, 0.75});
  CHECK(mar_point(complete) == doctest::Approx(0.5));

  const auto all_missing = make_missing({std::nullopt});
  CHECK_THROWS_AS(mar_point(all_missing), std::invalid_argument);
}

TEST_CASE("treatment mean bound: 4 of 10 on t with mean 0.75") {
  std::vector<TreatmentRecord> records{
      rec("t", 1.0), rec("t", 1.0), rec("t", 0.5), rec("t", 0.5),
      rec("u", 0.3), rec("u", 0.3), rec("u", 0.3),
      rec("u", 0.3), rec("u", 0.3), rec("u", 0.3)};
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});
  const BoundResult bound = mean_bound_treatment(data, "t");
  CHECK(std::abs(bound.interval.lo() - 0.30) < kExact);
  CHECK(std::abs(bound.interval.hi() - 0.90) < kExact);

  const double mar = mar_point(data, "t");
  CHECK(std::abs(mar - 0.75) < kExact);
  CHECK(bound.interval.contains(mar));
}

TEST_CASE("treatment mean bound: everyone treated point-identifies") {
  std::vector<TreatmentRecord> records{rec("t", 0.75), rec("t", 0.75)};
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});
  const BoundResult bound = mean_bound_treatment(data, "t");
  CHECK(bound.interval.is_point());
  CHECK(std::abs(bound.interval.lo() - 0.75) < kExact);
}

TEST_CASE("treatment mean bound: untreated arm gets the logical range") {
  std::vector<TreatmentRecord> records{rec("u", 0.5)};
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});
  const BoundResult bound = mean_bound_treatment(data, "t");
  CHECK(bound.interval == Interval(0.0, 1.0));
  CHECK(bound.degenerate());
  CHECK_THROWS_AS(mar_point(data, "t"), std::invalid_argument);
}

TEST_CASE("treatment mean bound rescales general ranges") {
  // Same data shifted/scaled from [0,1] to [-2, 2]: endpoints map affinely.
  std::vector<TreatmentRecord> unit{rec("t", 1.0), rec("t", 0.5),
                                    rec("u", 0.0)};
  std::vector<TreatmentRecord> wide{rec("t", 2.0), rec("t", 0.0),
                                    rec("u", -2.0)};
  const BoundResult u = mean_bound_treatment(
      TreatmentDataSet(unit, {"t", "u"}, {0.0, 1.0}), "t");
  const BoundResult w = mean_bound_treatment(
      TreatmentDataSet(wide, {"t", "u"}, {-2.0, 2.0}), "t");
  CHECK(w.interval.lo() == doctest::Approx(-2.0 + 4.0 * u.interval.lo()));
  CHECK(w.interval.hi() == doctest::Approx(-2.0 + 4.0 * u.interval.hi()));
}

TEST_CASE("effect bound worked values") {
  std::vector<TreatmentRecord> symmetric{
      rec("t", 1.0), rec("t", 1.0), rec("t", 0.5), rec("t", 0.5),
      rec("u", 1.0), rec("u", 1.0), rec("u", 0.5), rec("u", 0.5),
      rec("w", 0.1), rec("w", 0.1)};
  const TreatmentDataSet data(symmetric, {"t", "u", "w"}, {0.0, 1.0});
  const BoundResult self = ate_bound(data, "t", "u");
  CHECK(std::abs(self.interval.lo() + 0.6) < kExact);
  CHECK(std::abs(self.interval.hi() - 0.6) < kExact);

  std::vector<TreatmentRecord> example{
      rec("t", 1.0), rec("t", 1.0), rec("t", 0.5), rec("t", 0.5),
      rec("u", 0.5), rec("u", 0.5), rec("u", 0.5),
      rec("u", 0.5), rec("u", 0.5), rec("u", 0.5)};
  const TreatmentDataSet data2(example, {"t", "u"}, {0.0, 1.0});
  const BoundResult effect = ate_bound(data2, "t", "u");
  CHECK(std::abs(effect.interval.lo() + 0.40) < kExact);
  CHECK(std::abs(effect.interval.hi() - 0.60) < kExact);

  CHECK_THROWS_AS(ate_bound(data2, "t", "t"), std::invalid_argument);
}

TEST_CASE("instrument groups reproduce the three-clinician intersection") {
  std::vector<TreatmentRecord> records;
  auto add_group = [&](const std::string& g, int on_t_ones, int on_t_zeros,
                       int off_t) {
    for (int i = 0; i < on_t_ones; ++i) records.push_back(rec("t", 1.0, g));
    for (int i = 0; i < on_t_zeros; ++i) records.push_back(rec("t", 0.0, g));
    for (int i = 0; i < off_t; ++i) records.push_back(rec("u", 0.0, g));
  };
  // Per-group bounds [0.4, 0.7], [0.2, 0.6], [0.5, 1.0].
  add_group("c1", 4, 3, 3);
  add_group("c2", 2, 4, 4);
  add_group("c3", 5, 0, 5);
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});

  const IvIntersectionBound iv = iv_intersection_bound(data, "t");
  REQUIRE(iv.per_group.size() == 3);
  CHECK(std::abs(iv.per_group[0].interval.lo() - 0.4) < kExact);
  CHECK(std::abs(iv.per_group[0].interval.hi() - 0.7) < kExact);
  CHECK(std::abs(iv.per_group[1].interval.lo() - 0.2) < kExact);
  CHECK(std::abs(iv.per_group[1].interval.hi() - 0.6) < kExact);
  CHECK(std::abs(iv.per_group[2].interval.lo() - 0.5) < kExact);
  CHECK(std::abs(iv.per_group[2].interval.hi() - 1.0) < kExact);

  REQUIRE(iv.combined.has_value());
  CHECK(std::abs(iv.combined->lo() - 0.5) < kExact);
  CHECK(std::abs(iv.combined->hi() - 0.6) < kExact);
}

TEST_CASE("instrument analysis with a single group matches the plain bound") {
  std::vector<TreatmentRecord> records{rec("t", 0.8, "g"), rec("u", 0.1, "g"),
                                       rec("t", 0.4, "g")};
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});
  const IvIntersectionBound iv = iv_intersection_bound(data, "t");
  REQUIRE(iv.combined.has_value());
  CHECK(*iv.combined == mean_bound_treatment(data, "t").interval);
}

TEST_CASE("disjoint group bounds refute the common-response assumption") {
  std::vector<TreatmentRecord> records;
  for (int i = 0; i < 5; ++i) records.push_back(rec("t", 0.2, "g1"));
  for (int i = 0; i < 5; ++i) records.push_back(rec("t", 0.9, "g2"));
  const TreatmentDataSet data(records, {"t"}, {0.0, 1.0});
  const IvIntersectionBound iv = iv_intersection_bound(data, "t");
  CHECK_FALSE(iv.combined.has_value());
  CHECK_FALSE(iv.diagnostics.empty());
}

TEST_CASE("instrument analysis requires group labels everywhere") {
  std::vector<TreatmentRecord> records{rec("t", 0.5, "g"), rec("t", 0.5)};
  const TreatmentDataSet data(records, {"t"}, {0.0, 1.0});
  CHECK_THROWS_AS(iv_intersection_bound(data, "t"), std::invalid_argument);
}

TEST_CASE("group with no treated records contributes the logical range") {
  std::vector<TreatmentRecord> records{rec("t", 0.5, "g1"), rec("u", 0.2, "g2")};
  const TreatmentDataSet data(records, {"t", "u"}, {0.0, 1.0});
  const IvIntersectionBound iv = iv_intersection_bound(data, "t");
  REQUIRE(iv.per_group.size() == 2);
  CHECK(iv.per_group[1].interval == Interval(0.0, 1.0));
  CHECK_FALSE(iv.diagnostics.empty());
}

TEST_CASE("width laws hold on randomized datasets") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const MissingDataSet data = testing::random_missing_dataset(rng);
    std::uniform_real_distribution<double> thr(data.range().min - 0.5,
                                               data.range().max + 0.5);
    const double p_missing = static_cast<double>(data.missing_count()) /
                             static_cast<double>(data.size());
    CHECK(std::abs(cdf_bound(data, thr(rng)).interval.width() - p_missing) <
          kExact);
    CHECK(std::abs(mean_bound_missing(data).interval.width() -
                   p_missing * data.range().span()) < 1e-11);

    const TreatmentDataSet tdata = testing::random_treatment_dataset(rng, false);
    const std::string& t = tdata.treatments().front();
    const BoundResult bound = mean_bound_treatment(tdata, t);
    const double p_off = 1.0 - static_cast<double>(tdata.count_on(t)) /
                                   static_cast<double>(tdata.size());
    CHECK(std::abs(bound.interval.width() / tdata.range().span() - p_off) <
          kExact);
  }
}

TEST_CASE("bounds agree with explicit extremal imputation") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const MissingDataSet data = testing::random_missing_dataset(rng, 20);
    CHECK(std::abs(mean_bound_missing(data).interval.lo() -
                   testing::oracle_mean_bound_missing(data).lo()) < kExact);
    CHECK(std::abs(mean_bound_missing(data).interval.hi() -
                   testing::oracle_mean_bound_missing(data).hi()) < kExact);

    std::uniform_real_distribution<double> thr(data.range().min,
                                               data.range().max);
    const double threshold = thr(rng);
    if (data.observed_count() > 0) {
      const Interval oracle = testing::oracle_cdf_bound(data, threshold);
      CHECK(std::abs(cdf_bound(data, threshold).interval.lo() - oracle.lo()) <
            kExact);
      CHECK(std::abs(cdf_bound(data, threshold).interval.hi() - oracle.hi()) <
            kExact);
    }
  }
}

TEST_CASE("deleting an observed outcome never shrinks a bound") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const MissingDataSet data = testing::random_missing_dataset(rng, 20);
    if (data.observed_count() == 0) continue;
    std::vector<MissingDataRecord> records = data.records();
    for (auto& r : records) {
      if (r.outcome) {
        r.outcome.reset();
        break;
      }
    }
    const MissingDataSet wider(records, data.range());

    const Interval before_mean = mean_bound_missing(data).interval;
    const Interval after_mean = mean_bound_missing(wider).interval;
    CHECK(after_mean.lo() <= before_mean.lo() + kExact);
    CHECK(after_mean.hi() >= before_mean.hi() - kExact);

    const double threshold = (data.range().min + data.range().max) / 2.0;
    const Interval before_cdf = cdf_bound(data, threshold).interval;
    const Interval after_cdf = cdf_bound(wider, threshold).interval;
    CHECK(after_cdf.lo() <= before_cdf.lo() + kExact);
    CHECK(after_cdf.hi() >= before_cdf.hi() - kExact);
  }
}

TEST_CASE("stronger assumptions nest inside the agnostic bound") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const MissingDataSet data = testing::random_missing_dataset(rng);
    if (data.observed_count() > 0) {
      CHECK(mean_bound_missing(data).interval.contains(mar_point(data)));
    }

    const TreatmentDataSet tdata = testing::random_treatment_dataset(rng, true);
    const std::string& t = tdata.treatments().front();
    const IvIntersectionBound iv = iv_intersection_bound(tdata, t);
    if (iv.combined) {
      for (const GroupBound& g : iv.per_group) {
        CHECK(g.interval.contains(*iv.combined));
      }
    }
  }
}
