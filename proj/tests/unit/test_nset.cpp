#include <gtest/gtest.h>

#include <map>

#include "kprime/errors.hpp"
#include "kprime/nset.hpp"
#include "kprime/verify.hpp"
#include "oracles.hpp"

using namespace kprime;

TEST(NSet, MakeValidates) {
  EXPECT_THROW(FunctionalNSet::make("x", {1, 0}), MalformedTable);
  EXPECT_THROW(FunctionalNSet::make("x", {0, 3}), MalformedTable);
  EXPECT_THROW(FgNSet::make("x", {0, 5}), MalformedTable);
}

TEST(NSet, PathsAndLoops) {
  auto const p = path_nset(3);
  EXPECT_EQ(p.rank(), 3u);
  EXPECT_TRUE(classify_nset(p).rooted_tree);
  auto const l = loop_nset(4);
  auto const c = classify_nset(l);
  EXPECT_FALSE(c.rooted_tree);
  EXPECT_EQ(c.loop_lengths, std::vector<std::size_t>{4});
}

TEST(NSet, ClassifyAgreesWithIterationOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Elem> succ(n, 0);
    while (true) {
      auto const o = verify::cycle_oracle(succ);
      auto const c = classify_nset(FunctionalNSet::make("g", succ));
      EXPECT_EQ(c.rooted_tree, o.rooted_tree);
      EXPECT_EQ(c.loop_lengths, o.loop_lengths);
      std::size_t i = 1;
      while (i < n && ++succ[i] == n) {
        succ[i++] = 0;
      }
      if (i >= n) {
        break;
      }
    }
  }
}

TEST(NSet, EnumerationMatchesBruteForce) {
  auto const sets = enumerate_nsets(5);
  std::map<std::size_t, std::size_t> by_rank;
  for (auto const& x : sets) {
    ++by_rank[x.rank()];
  }
  for (std::size_t r = 0; r <= 5; ++r) {
    EXPECT_EQ(by_rank[r], oracle::nset_classes(r)) << "rank " << r;
  }
}

// Frozen from oracle::nset_classes.
TEST(NSet, EnumerationFrozenCounts) {
  auto const sets = enumerate_nsets(3);
  std::map<std::size_t, std::size_t> by_rank;
  for (auto const& x : sets) {
    ++by_rank[x.rank()];
  }
  EXPECT_EQ(by_rank[0], 1u);
  EXPECT_EQ(by_rank[1], 2u);
  EXPECT_EQ(by_rank[2], 6u);
  EXPECT_EQ(by_rank[3], 16u);
}

TEST(NSet, TruncatedASetIsPcExactlyForTrees) {
  for (auto const& x : enumerate_nsets(4)) {
    EXPECT_EQ(is_pc_aset(to_truncated_aset(x)).holds, classify_nset(x).rooted_tree) << nset_key(x);
  }
}

TEST(NSet, TruncatedASetRealisesSuccessor) {
  auto const x = FunctionalNSet::make("rho", {0, 2, 3, 4, 2});
  auto const a = to_truncated_aset(x);
  // Element 2 of the cyclic monoid is t.
  for (Elem p = 0; p < x.size(); ++p) {
    EXPECT_EQ(a.act(2, p), x.succ(p));
  }
}

TEST(NSet, KeyIsLabelInvariant) {
  auto const a = FunctionalNSet::make("a", {0, 0, 1, 1, 3});
  auto const b = FunctionalNSet::make("b", {0, 3, 4, 0, 3});
  EXPECT_EQ(nset_key(a), nset_key(b));
  EXPECT_NE(nset_key(a), nset_key(path_nset(4)));
}

TEST(FgNSet, ChainAbsorbsSingleCorePredecessor) {
  // v -> root, root starts a tail: the same as one tail-root.
  auto const x = FgNSet::make("x", {0, kTail, 1});
  EXPECT_EQ(fgn_key(x), fgn_key(free_chain()));
  EXPECT_FALSE(x.is_finite());
}

TEST(FgNSet, ForkIsNotAChain) {
  auto const fork = FgNSet::make("fork", {0, kTail, 1, 1});
  EXPECT_NE(fgn_key(fork), fgn_key(free_chain()));
  EXPECT_TRUE(fgn_iso(fork, FgNSet::make("fork2", {0, 2, kTail, 2})).has_value());
}

TEST(FgNSet, QuotientOfChainIsPath) {
  auto const n = free_chain();
  for (std::size_t k = 1; k <= 4; ++k) {
    bool found = false;
    for (auto const& y : fgn_subsets(n, k)) {
      if (!y.core[1] && y.entry[1] == k) {
        auto const q = fgn_quotient(n, y);
        EXPECT_TRUE(q.is_finite());
        EXPECT_EQ(fgn_key(q), fgn_key(FgNSet::from_finite(path_nset(k))));
        EXPECT_EQ(fgn_key(fgn_subobject(n, y)), fgn_key(n));
        found = true;
      }
    }
    EXPECT_TRUE(found) << k;
  }
}

TEST(FgNSet, FiniteEnumerationAgreesWithFunctional) {
  EXPECT_EQ(enumerate_fgnsets(4, false).size(), enumerate_nsets(4).size());
  EXPECT_GT(enumerate_fgnsets(3, true).size(), enumerate_fgnsets(3, false).size());
}

TEST(FgNSet, SubsetsAreClosed) {
  auto const x = FgNSet::make("x", {0, kTail, 1, 1, 0});
  for (auto const& y : fgn_subsets(x, 2)) {
    EXPECT_NO_THROW(check_closed(x, y));
  }
}
