#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"
#include "ufc/error.hpp"
#include "ufc/stats.hpp"
#include "ufc/ufc.hpp"

using namespace ufc;
using ufc::testing::make_dataset;
using ufc::testing::naive_eval;

namespace {

std::vector<std::string> repeat_rows(const std::vector<std::pair<std::string, int>>& blocks) {
  std::vector<std::string> rows;
  for (const auto& [pattern, count] : blocks) rows.insert(rows.end(), count, pattern);
  return rows;
}

// f3 lies inside f1 & f2, f4 is disjoint from the rest.
Dataset nested_toy() {
  return make_dataset({"f1", "f2", "f3", "f4", "f5"},
                      repeat_rows({{"11100", 10}, {"11000", 20}, {"10000", 8}, {"01000", 8},
                                   {"01001", 2}, {"00001", 15}, {"00010", 15}, {"00000", 22}}));
}

Dataset duplicated_toy() {
  return make_dataset({"a", "acopy", "b"}, repeat_rows({{"110", 5}, {"111", 5}, {"000", 5}, {"001", 5}}));
}

// Balanced full factorial over three columns: every pair has r = 0 exactly.
Dataset orthogonal_design() {
  return make_dataset({"x", "y", "z"}, repeat_rows({{"000", 3}, {"001", 3}, {"010", 3}, {"011", 3},
                                                    {"100", 3}, {"101", 3}, {"110", 3}, {"111", 3}}));
}

std::set<std::string> canonical_set(const std::vector<std::string>& exprs) {
  std::set<std::string> out;
  for (const auto& e : exprs) out.insert(canonical_string(parse(e)));
  return out;
}

std::set<std::string> as_set(const FeatureSet& fs) {
  const auto t = fs.texts();
  return {t.begin(), t.end()};
}

}  // namespace

TEST(SearchPairs, OrthogonalDesignYieldsNothing) {
  const FeatureSet fs = FeatureSet::primitives(orthogonal_design());
  EXPECT_TRUE(search_correlated_pairs(fs, 0.3, false).empty());
  EXPECT_TRUE(search_correlated_pairs(fs, 0.0, false).empty());
}

TEST(SearchPairs, SortedDescendingAboveThreshold) {
  const FeatureSet fs = FeatureSet::primitives(nested_toy());
  const auto pairs = search_correlated_pairs(fs, 0.3, false);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].i, 0u);
  EXPECT_EQ(pairs[0].j, 1u);
  for (std::size_t p = 1; p < pairs.size(); ++p) EXPECT_GE(pairs[p - 1].r, pairs[p].r);
  for (const auto& p : pairs) {
    EXPECT_GT(p.r, 0.3);
    EXPECT_DOUBLE_EQ(p.r, pearson_r(contingency(fs.extension(p.i), fs.extension(p.j))));
  }
}

TEST(SearchPairs, ThresholdIsStrict) {
  const FeatureSet fs = FeatureSet::primitives(nested_toy());
  const auto all = search_correlated_pairs(fs, 0.0, false);
  ASSERT_FALSE(all.empty());
  const double top = all.front().r;
  for (const auto& p : search_correlated_pairs(fs, top, false)) EXPECT_GT(p.r, top);
}

TEST(SearchPairs, PruningDropsSparseTables) {
  // a and b co-occur in only 2 of 100 rows; r is large but the expected joint count is 0.25.
  const Dataset d = make_dataset({"a", "b"}, repeat_rows({{"11", 2}, {"10", 3}, {"01", 3}, {"00", 92}}));
  const FeatureSet fs = FeatureSet::primitives(d);
  EXPECT_EQ(search_correlated_pairs(fs, 0.2, false).size(), 1u);
  EXPECT_TRUE(search_correlated_pairs(fs, 0.2, true).empty());
}

TEST(Construct, ChildrenPartitionTheUnionByBruteForce) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Dataset d = ufc::testing::random_dataset(rng, 1 + rng() % 16, 3);
    const FeatureExpr fi = ufc::testing::random_expr(rng, d.names(), 2);
    const FeatureExpr fj = ufc::testing::random_expr(rng, d.names(), 2);
    const auto kids = construct_new_features(fi, fj);
    for (std::size_t i = 0; i < d.n(); ++i) {
      const int count = naive_eval(kids[0], d, i) + naive_eval(kids[1], d, i) + naive_eval(kids[2], d, i);
      EXPECT_LE(count, 1);
      EXPECT_EQ(count == 1, naive_eval(fi, d, i) || naive_eval(fj, d, i));
    }
  }
}

TEST(Construct, ShapeOfChildren) {
  const auto kids = construct_new_features(parse("water"), parse("cascade"));
  EXPECT_EQ(kids[0].text(), "cascade & water");
  EXPECT_EQ(kids[1].text(), "!water & cascade");
  EXPECT_EQ(kids[2].text(), "!cascade & water");
}

TEST(Prune, DropsParentsAndZeroSupport) {
  // cascade lies inside water: the child !water & cascade never fires.
  const Dataset d = make_dataset({"water", "cascade"}, repeat_rows({{"11", 6}, {"10", 4}, {"00", 10}}));
  const FeatureSet fs = FeatureSet::primitives(d);
  const IterationStep step = ufc_iteration(fs, 0.1, false);
  EXPECT_EQ(as_set(step.next), canonical_set({"water & cascade", "water & !cascade"}));
  EXPECT_EQ(step.next.size(), fs.size());
  EXPECT_NE(std::find(step.log.pruned.begin(), step.log.pruned.end(), "!water & cascade"), step.log.pruned.end());
  EXPECT_EQ(step.log.combined.size(), 1u);
}

TEST(Prune, EmptyResultThrows) {
  FeatureSet fs(3, 1, 3);
  fs.add(parse("a"), BitVector(3));
  EXPECT_THROW(prune_obsolete_features(fs, {}), Error);
}

TEST(UfcRun, NestedScenarioReachesPublishedFinalSet) {
  const RunResult run = ufc_run(nested_toy(), UfcConfig::fixed(0.45, 5));
  EXPECT_EQ(as_set(run.features), canonical_set({"f1 & !f2", "f1 & f2 & f3", "f1 & f2 & !f3", "!f1 & f2", "f4", "f5"}));
  EXPECT_EQ(run.iterations(), 2u);
  EXPECT_EQ(run.stop_reason, StopReason::fixpoint);
  ASSERT_EQ(run.log.size(), 2u);
  EXPECT_EQ(run.log[0].combined.size(), 1u);
  EXPECT_EQ(run.log[1].combined.size(), 1u);
}

TEST(UfcRun, IterationLimitStopsEarly) {
  const RunResult run = ufc_run(nested_toy(), UfcConfig::fixed(0.45, 1));
  EXPECT_EQ(run.iterations(), 1u);
  EXPECT_EQ(run.stop_reason, StopReason::iter_limit);
  EXPECT_EQ(as_set(run.features), canonical_set({"f1 & f2", "!f1 & f2", "f1 & !f2", "f3", "f4", "f5"}));
}

TEST(UfcRun, DuplicatedColumnsCollapse) {
  const RunResult run = ufc_run(duplicated_toy(), UfcConfig::fixed(0.3, 5));
  EXPECT_EQ(as_set(run.features), canonical_set({"a & acopy", "b"}));
  ASSERT_GE(run.trajectory.size(), 2u);
  EXPECT_LT(run.trajectory[1].oi, run.trajectory[0].oi);
  EXPECT_NEAR(run.trajectory[0].oi, 0.25, 1e-12);
  EXPECT_NEAR(run.trajectory[1].oi, 0.125, 1e-12);
  EXPECT_NEAR(run.trajectory[1].c0, -1.0, 1e-12);
}

TEST(UfcRun, OrthogonalDesignIsFixpointAtOnce) {
  const RunResult run = ufc_run(orthogonal_design(), UfcConfig::fixed(0.1, 5));
  EXPECT_EQ(run.iterations(), 0u);
  EXPECT_EQ(run.stop_reason, StopReason::fixpoint);
  EXPECT_EQ(run.features, FeatureSet::primitives(orthogonal_design()));
}

TEST(UfcRun, ExtensionsMatchEvaluation) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = ufc::testing::random_dataset(rng, 40 + rng() % 200, 4 + rng() % 5, 0.4);
    if (unique_count(d) <= d.k()) continue;
    const RunResult run = ufc_run(d, UfcConfig::fixed(0.05, 4));
    for (std::size_t i = 0; i < run.features.size(); ++i) {
      EXPECT_EQ(run.features.extension(i), evaluate(run.features.feature(i), d));
    }
  }
}

TEST(UfcRun, RiskModeStopsAtFirstRmsIncrease) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset d = ufc::testing::random_dataset(rng, 300, 8, 0.5);
    const RunResult run = ufc_run(d, UfcConfig::risk(0.2, 50));
    EXPECT_NEAR(run.lambda, lambda_from_risk(0.2, d.n()), 1e-15);
    EXPECT_TRUE(run.pruning);
    for (std::size_t t = 1; t < run.trajectory.size(); ++t) {
      EXPECT_LE(run.trajectory[t].rms, run.trajectory[t - 1].rms);
    }
    if (run.stop_reason == StopReason::rms_minimum) {
      ASSERT_TRUE(run.rejected.has_value());
      EXPECT_GT(run.rejected->rms, run.trajectory.back().rms);
    }
  }
}

TEST(UfcRun, RejectsBadConfigAndDegenerateData) {
  EXPECT_THROW(ufc_run(nested_toy(), UfcConfig::fixed(0.0, 2)), Error);
  EXPECT_THROW(ufc_run(nested_toy(), UfcConfig::fixed(0.2, 0)), Error);
  EXPECT_THROW(ufc_run(nested_toy(), UfcConfig::risk(0.7)), Error);
  const Dataset flat = make_dataset({"a", "b"}, {"10", "10", "10"});
  EXPECT_THROW(ufc_run(flat, UfcConfig::fixed(0.2, 2)), Error);
}

TEST(CountCommon, CanonicalIntersection) {
  const Dataset d = nested_toy();
  const FeatureSet x = FeatureSet::from_expressions({parse("f1 & f2"), parse("f3"), parse("f4")}, d);
  const FeatureSet y = FeatureSet::from_expressions({parse("f2 & f1"), parse("f4"), parse("f5")}, d);
  EXPECT_EQ(count_common(x, y), 2u);
  EXPECT_EQ(count_common(x, x), 3u);
}
