#include <gtest/gtest.h>

#include "kprime/axioms.hpp"
#include "kprime/builders.hpp"
#include "support.hpp"

using namespace kprime;
using testing_support::monoid;

TEST(RandomASet, ValidAndBounded) {
  for (char const* f : {"ntr3.monoid", "z2plus.monoid", "proto2.monoid", "zero.monoid"}) {
    auto const a = monoid(f);
    Rng        rng(1);
    for (int i = 0; i < 200; ++i) {
      auto const x = random_aset(a, rng, 6);
      EXPECT_LE(x.rank(), 6u);
      EXPECT_NO_THROW(FiniteASet::from_table(a, "copy", x.size(), x.table()));
      auto const y = random_subset(x, rng);
      EXPECT_NO_THROW(ASubset::make(x, y.members()));
      auto const iso = random_iso(x, rng);
      EXPECT_TRUE(is_bijective(iso));
    }
  }
}

TEST(RandomASet, MostDrawsAreNotThePoint) {
  auto const a      = monoid("ntr3.monoid");
  Rng        rng(2);
  int        points = 0;
  for (int i = 0; i < 1000; ++i) {
    points += random_aset(a, rng, 8).rank() == 0 ? 1 : 0;
  }
  EXPECT_LT(points, 200);
  EXPECT_GT(points, 0);
}

TEST(Axioms, IdsInSuiteOrder) {
  auto const ids = axiom_ids();
  ASSERT_EQ(ids.size(), 21u);
  EXPECT_EQ(ids.front(), "qe-i");
  EXPECT_EQ(ids.back(), "first-isomorphism");
  SampleConfig cfg;
  cfg.samples    = 5;
  auto const all = check_all_axioms(monoid("f1.monoid"), cfg);
  ASSERT_EQ(all.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(all[i].axiom, ids[i]);
    EXPECT_EQ(all[i].tested, 5u);
  }
}

TEST(Axioms, NoCounterexamplesOnSmallRuns) {
  SampleConfig cfg;
  cfg.samples = 150;
  for (char const* f : {"f1.monoid", "ntr3.monoid", "proto2.monoid", "s3plus.monoid", "idempotent.monoid",
                        "z3plus_twisted2.monoid"}) {
    for (auto const& r : check_all_axioms(monoid(f), cfg)) {
      EXPECT_TRUE(r.passed()) << f << " " << r.axiom << ": " << (r.failures.empty() ? "" : r.failures[0]);
    }
  }
}

TEST(Axioms, ReportsAreDeterministic) {
  SampleConfig cfg;
  cfg.samples = 60;
  cfg.seed    = 99;
  auto const a = monoid("ntr2_ntr2.monoid");
  auto const x = check_acgw(a, cfg);
  auto const y = check_acgw(a, cfg);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(to_json(x[i]), to_json(y[i]));
  }
  cfg.seed = 100;
  EXPECT_NE(to_json(check_acgw(a, cfg)[0]), to_json(x[0]));
}

TEST(Axioms, MergeAddsAndConcatenates) {
  AxiomReport a{"qe-i", "M", 3, {"f1"}, 7};
  AxiomReport b{"qe-i", "N", 4, {"f2", "f3"}, 7};
  auto const  m = merge(a, b);
  EXPECT_EQ(m.tested, 7u);
  EXPECT_EQ(m.failures, (std::vector<std::string>{"f1", "f2", "f3"}));
  AxiomReport c{"qe-i", "P", 1, {}, 7};
  EXPECT_EQ(to_json(merge(merge(a, b), c)), to_json(merge(a, merge(b, c))));
}

TEST(Axioms, JsonHasReportSchema) {
  AxiomReport r{"cgw-Z", "F1", 10, {}, 5};
  std::string const j = to_json(r);
  for (char const* key : {"\"axiom\"", "\"tested\"", "\"failures\"", "\"seed\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}
