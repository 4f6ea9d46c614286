#include <gtest/gtest.h>

#include "kprime/verify.hpp"

using namespace kprime::verify;

TEST(CycleOracle, Examples) {
  EXPECT_TRUE(cycle_oracle({0}).rooted_tree);
  EXPECT_TRUE(cycle_oracle({0, 0, 1, 1}).rooted_tree);
  auto const rho = cycle_oracle({0, 2, 3, 4, 2});
  EXPECT_FALSE(rho.rooted_tree);
  EXPECT_EQ(rho.loop_lengths, std::vector<std::size_t>{3});
  auto const two = cycle_oracle({0, 1, 3, 2, 0});
  EXPECT_EQ(two.loop_lengths, (std::vector<std::size_t>{1, 2}));
}

TEST(SubgroupOracle, SmallGroups) {
  EXPECT_EQ(subgroup_class_count({{0}}), 1u);
  EXPECT_EQ(subgroup_class_count({{0, 1}, {1, 0}}), 2u);
  EXPECT_EQ(subgroup_class_count({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}), 5u);
}

TEST(Criteria, IdsAndTitles) {
  auto const ids = criterion_ids();
  EXPECT_EQ(ids, (std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7", "8a", "8b", "8c", "8d"}));
  for (auto const& id : ids) {
    EXPECT_FALSE(criterion_title(id).empty());
  }
}

TEST(Criteria, UnknownIdFailsWithoutThrowing) {
  Options o;
  o.corpus_dir = KPRIME_CORPUS_DIR;
  auto const r = run_criterion("99", o);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(format_line(r).rfind("FAIL", 0), 0u);
}

TEST(Criteria, MissingCorpusIsAFailureNotACrash) {
  Options o;
  o.corpus_dir = "/nonexistent";
  auto const r = run_criterion("5", o);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("exception"), std::string::npos);
}

TEST(Criteria, BurnsideCriterionPasses) {
  Options o;
  o.corpus_dir = KPRIME_CORPUS_DIR;
  auto const r = run_criterion("5", o);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(format_line(r).rfind("PASS  5  ", 0), 0u);
}
