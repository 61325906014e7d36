// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "logrev/doi_kernel.hpp"
#include "logrev/error.hpp"

namespace logrev {
namespace {

MethodId id(int i) { return {"F.java", "F.m" + std::to_string(i) + "()"}; }

// Recomputes DOI(x) from the whole stream: w * sum of x's weights minus
// decay times the number of other elements' events after x's first event.
double brute_force_doi(const std::vector<EditEvent>& stream, const MethodId& x, double w, double decay) {
  double weights = 0.0;
  long first = -1;
  long foreign_after = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (stream[i].element == x) {
      if (first < 0) first = static_cast<long>(i);
      weights += stream[i].weight;
    } else if (first >= 0) {
      ++foreign_after;
    }
  }
  if (first < 0) return 0.0;
  return std::max(0.0, w * weights - decay * static_cast<double>(foreign_after));
}

TEST(DoiModel, UntouchedElementHasZeroInterest) {
  DoiModel model;
  EXPECT_EQ(model.doi(id(1)), 0.0);
  model.apply({id(2), 0});
  EXPECT_EQ(model.doi(id(1)), 0.0);
}

TEST(DoiModel, SingleEditGivesEditWeight) {
  DoiModel model({2.5, 0.1});
  model.apply({id(1), 0});
  EXPECT_EQ(model.doi(id(1)), 2.5);
}

TEST(DoiModel, ForeignEditsDecayOwnEditsDoNot) {
  DoiModel model({1.0, 0.25});
  model.apply({id(1), 0});
  model.apply({id(2), 0});
  model.apply({id(1), 1});
  model.apply({id(3), 1});
  // x: 2 edits, foreign events after its first: id2 and id3.
  EXPECT_EQ(model.doi(id(1)), 2.0 - 0.5);
  EXPECT_EQ(model.doi(id(2)), 1.0 - 0.5);
  EXPECT_EQ(model.doi(id(3)), 1.0);
}

TEST(DoiModel, InterestIsClampedAtZero) {
  DoiModel model({1.0, 0.4});
  model.apply({id(1), 0});
  for (int i = 0; i < 5; ++i) model.apply({id(2), i});
  EXPECT_EQ(model.doi(id(1)), 0.0);
}

TEST(DoiModel, MatchesBruteForceOnRandomStreams) {
  std::mt19937 rng(20240611);
  const double decays[] = {0.0, 0.001, 0.017};
  const double weights[] = {1.0, 0.5, 2.0};
  for (int trial = 0; trial < 300; ++trial) {
    const int elements = std::uniform_int_distribution<int>(1, 50)(rng);
    const int events = std::uniform_int_distribution<int>(0, 500)(rng);
    const DoiParams params{weights[trial % 3], decays[std::uniform_int_distribution<int>(0, 2)(rng)]};
    std::vector<EditEvent> stream;
    DoiModel model(params);
    for (int e = 0; e < events; ++e) {
      EditEvent ev{id(std::uniform_int_distribution<int>(0, elements - 1)(rng)), e / 7,
                   weights[std::uniform_int_distribution<int>(0, 2)(rng)]};
      stream.push_back(ev);
      model.apply(ev);
    }
    for (int x = 0; x < elements; ++x) {
      ASSERT_EQ(model.doi(id(x)), brute_force_doi(stream, id(x), params.edit_weight, params.decay))
          << "trial " << trial << " element " << x;
    }
  }
}

TEST(DoiModel, SeedCopiesSourceInterestAndRestartsDecay) {
  DoiModel model({1.0, 0.125});
  model.apply({id(1), 0});
  model.apply({id(1), 0});
  model.apply({id(2), 0});
  const double at_seed = model.doi(id(1));
  EXPECT_EQ(at_seed, 2.0 - 0.125);
  model.seed(id(1), id(9));
  EXPECT_EQ(model.doi(id(9)), at_seed);
  model.apply({id(2), 1});
  model.apply({id(9), 1});
  // One foreign event after the seed, one own edit.
  EXPECT_EQ(model.doi(id(9)), at_seed + 1.0 - 0.125);
}

TEST(DoiModel, SeedFromUntrackedSourceIsZero) {
  DoiModel model;
  model.apply({id(1), 0});
  model.seed(id(7), id(8));
  EXPECT_EQ(model.doi(id(8)), 0.0);
}

TEST(DoiModel, DumpListsElementsInOrder) {
  DoiModel model({1.0, 0.5});
  model.apply({id(2), 0});
  model.apply({id(1), 0});
  EXPECT_EQ(model.dump_csv(), "element,n,W,f,DOI\nF.java#F.m1(),1,1,1,1\nF.java#F.m2(),1,1,0,0.5\n");
}

TEST(PartitionTable, RejectsFewerThanTwoLevels) {
  EXPECT_THROW(PartitionTable(0.0, 1.0, {"INFO"}), ConfigError);
}

TEST(PartitionTable, EqualWidthIntervals) {
  PartitionTable t(1.0, 5.0, {"A", "B", "C", "D"});
  EXPECT_FALSE(t.degenerate());
  EXPECT_EQ(t.interval(0), std::make_pair(1.0, 2.0));
  EXPECT_EQ(t.interval(3), std::make_pair(4.0, 5.0));
  EXPECT_EQ(*t.lookup(1.0), "A");
  EXPECT_EQ(*t.lookup(1.999), "A");
  EXPECT_EQ(*t.lookup(2.0), "B");
  EXPECT_EQ(*t.lookup(5.0), "D");
  EXPECT_EQ(*t.lookup(4.5), "D");
}

TEST(PartitionTable, DegenerateRangeHasNoLookup) {
  PartitionTable t(3.0, 3.0, {"A", "B"});
  EXPECT_TRUE(t.degenerate());
  EXPECT_FALSE(t.lookup(3.0).has_value());
}

TEST(PartitionTable, RandomTablesArePartitions) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> value(0.0, 1000.0);
  for (int trial = 0; trial < 2000; ++trial) {
    double m = value(rng);
    double M = m + std::uniform_real_distribution<double>(1e-6, 500.0)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    std::vector<std::string> levels;
    for (std::size_t i = 0; i < k; ++i) levels.push_back("L" + std::to_string(i));
    PartitionTable t(m, M, levels);
    const double width = (M - m) / static_cast<double>(k);
    ASSERT_EQ(t.interval(0).first, m);
    ASSERT_EQ(t.interval(k - 1).second, M);
    for (std::size_t i = 0; i < k; ++i) {
      const auto [lo, hi] = t.interval(i);
      ASSERT_NEAR(hi - lo, width, 1e-9);
      if (i + 1 < k) {
        ASSERT_EQ(hi, t.interval(i + 1).first);
      }
      ASSERT_EQ(t.index_of(lo), i);
    }
    double prev = m;
    std::size_t prev_index = 0;
    for (int s = 0; s < 50; ++s) {
      const double x = prev + std::uniform_real_distribution<double>(0.0, (M - m) / 20.0)(rng);
      const std::size_t idx = t.index_of(std::min(x, M));
      ASSERT_GE(idx, prev_index);
      const auto [lo, hi] = t.interval(idx);
      const double y = std::min(x, M);
      ASSERT_TRUE(lo <= y && (y < hi || (idx == k - 1 && y <= hi)));
      prev = x;
      prev_index = idx;
    }
  }
}

TEST(Partitions, BuiltFromTrackedElements) {
  DoiModel model({1.0, 0.0});
  model.apply({id(1), 0});
  model.apply({id(2), 0});
  model.apply({id(2), 0});
  const auto t = build_partitions(model, {id(1), id(2), id(3)}, {"LOW", "HIGH"});
  EXPECT_EQ(t.min(), 0.0);
  EXPECT_EQ(t.max(), 2.0);
  EXPECT_TRUE(build_partitions(model, {}, {"LOW", "HIGH"}).degenerate());
}

TEST(Partitions, InScopeLevelsDropCategories) {
  const auto levels = in_scope_levels(jul_profile(), {"WARNING", "SEVERE"});
  EXPECT_EQ(levels, (std::vector<std::string>{"FINEST", "FINER", "FINE", "INFO"}));
  EXPECT_EQ(in_scope_levels(jul_profile(), {}).size(), 6u);
}

LoggingStatement statement(const MethodId& method, std::string level) {
  LoggingStatement st;
  st.file = method.path;
  st.framework = "jul";
  st.enclosing = method;
  st.level = std::move(level);
  return st;
}

TEST(Mismatches, FoundWhereLevelDisagreesWithPartition) {
  DoiModel model({1.0, 0.0});
  model.apply({id(1), 0});
  for (int i = 0; i < 3; ++i) model.apply({id(2), 0});
  std::vector<LoggingStatement> sts = {statement(id(1), "INFO"), statement(id(2), "FINEST"),
                                       statement(id(2), "SEVERE"), statement(id(1), "FINEST")};
  sts.push_back(statement(id(1), "FINE"));
  sts.back().level.reset();
  const auto levels = in_scope_levels(jul_profile(), {"WARNING", "SEVERE"});
  const auto table = build_partitions(model, {id(1), id(2)}, levels);
  const auto found = find_mismatches(sts, {0, 1, 2, 3, 4}, model, table, jul_profile(), {"WARNING", "SEVERE"});
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].statement, 0u);
  EXPECT_EQ(found[0].target, "FINEST");
  EXPECT_EQ(found[0].direction, Direction::kLower);
  EXPECT_EQ(found[0].distance, 3);
  EXPECT_EQ(found[1].statement, 1u);
  EXPECT_EQ(found[1].target, "INFO");
  EXPECT_EQ(found[1].direction, Direction::kRaise);
  EXPECT_EQ(found[1].doi, 3.0);
}

TEST(Mismatches, NoneWhenAllInterestIsEqual) {
  DoiModel model({1.0, 0.0});
  model.apply({id(1), 0});
  model.apply({id(2), 0});
  std::vector<LoggingStatement> sts = {statement(id(1), "INFO"), statement(id(2), "FINEST")};
  const auto table = build_partitions(model, {id(1), id(2)}, in_scope_levels(jul_profile(), {}));
  EXPECT_TRUE(table.degenerate());
  EXPECT_TRUE(find_mismatches(sts, {0, 1}, model, table, jul_profile(), {}).empty());
}

}  // namespace
}  // namespace logrev
