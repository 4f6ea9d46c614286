#include <gtest/gtest.h>

#include "kprime/builders.hpp"
#include "kprime/errors.hpp"
#include "kprime/ktheory.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kprime;
using testing_support::monoid;

namespace {

  // Free rank of Z^g / <relations> by rational elimination.
  std::size_t oracle_free_rank(K0Presentation const& p) {
    std::vector<std::vector<std::int64_t>> rows;
    for (auto const& r : p.relations) {
      std::vector<std::int64_t> row(p.size(), 0);
      for (auto const& [g, c] : r) {
        row[g] += c;
      }
      rows.push_back(row);
    }
    return p.size() - oracle::rational_rank(rows);
  }

  std::vector<Integer> class_of(SmithResult const& s, K0Presentation const& p, FiniteASet const& x) {
    auto const g = p.find(canonical_key(x));
    EXPECT_TRUE(g.has_value());
    return s.classes.classes.at(*g);
  }

  struct Case {
    char const* file;
    Flavor      flavor;
    std::size_t bound;
    std::size_t rank;
  };

}  // namespace

TEST(KTheory, FlavorNames) {
  for (auto f : {Flavor::all, Flavor::pc, Flavor::free, Flavor::nset, Flavor::fgnset}) {
    EXPECT_EQ(parse_flavor(to_string(f)), f);
  }
  EXPECT_FALSE(parse_flavor("bogus").has_value());
}

TEST(KTheory, NSetFlavorNeedsNoMonoid) {
  EXPECT_THROW(build_presentation(share(make_f1()), Flavor::nset, 2), FlavorUnavailable);
}

// Free ranks frozen from oracle_free_rank; the test also re-derives them.
TEST(KTheory, FreeRankMatchesRationalOracle) {
  std::vector<Case> const cases{
      {"f1.monoid", Flavor::pc, 5, 1},       {"ntr3.monoid", Flavor::pc, 4, 1},
      {"ntr2.monoid", Flavor::all, 4, 1},    {"proto1.monoid", Flavor::pc, 4, 1},
      {"proto2.monoid", Flavor::all, 4, 2},  {"z2plus.monoid", Flavor::all, 4, 2},
      {"z2plus.monoid", Flavor::pc, 4, 1},   {"z2plus.monoid", Flavor::free, 6, 1},
      {"idempotent.monoid", Flavor::all, 3, 2},
  };
  for (auto const& c : cases) {
    auto const p = build_presentation(monoid(c.file), c.flavor, c.bound);
    auto const s = smith(p);
    EXPECT_EQ(s.group.free_rank, oracle_free_rank(p)) << c.file << " " << to_string(c.flavor);
    EXPECT_EQ(s.group.free_rank, c.rank) << c.file << " " << to_string(c.flavor);
    EXPECT_TRUE(verify_smith(s.group));
    EXPECT_TRUE(verify_additivity(p, s));
  }
}

TEST(KTheory, Nt3PcAtBoundFour) {
  auto const s = smith(build_presentation(monoid("ntr3.monoid"), Flavor::pc, 4));
  EXPECT_EQ(s.group.free_rank, 1u);
  EXPECT_TRUE(s.group.torsion.empty());
  EXPECT_EQ(s.group.describe(), "Z");
}

TEST(KTheory, ReducedCardinalityIsAdditiveEverywhere) {
  for (char const* f : {"f1.monoid", "ntr2.monoid", "ntr3.monoid", "proto2.monoid", "z2plus.monoid",
                        "idempotent.monoid", "leftzero.monoid"}) {
    for (auto fl : {Flavor::all, Flavor::pc}) {
      EXPECT_TRUE(reduced_cardinality_is_additive(build_presentation(monoid(f), fl, 3))) << f;
    }
  }
  EXPECT_TRUE(reduced_cardinality_is_additive(build_nset_presentation(4, false)));
}

TEST(KTheory, RegularNt2IsTwiceS0) {
  auto const a  = share(make_truncated_polynomial(2));
  auto const p  = build_presentation(a, Flavor::pc, 2);
  auto const s  = smith(p);
  auto const s0 = enumerate_asets(a, 1, ASetFlavor::pc).back();
  ASSERT_EQ(s0.rank(), 1u);
  auto const ca = class_of(s, p, regular_aset(a));
  auto const c0 = class_of(s, p, s0);
  ASSERT_EQ(ca.size(), 1u);
  EXPECT_EQ(ca[0], 2 * c0[0]);
}

TEST(KTheory, RelationsAreDeduplicatedAndSorted) {
  auto const p = build_presentation(monoid("ntr3.monoid"), Flavor::all, 3);
  for (std::size_t i = 1; i < p.relations.size(); ++i) {
    EXPECT_LT(p.relations[i - 1], p.relations[i]);
  }
  for (auto const& r : p.relations) {
    for (std::size_t i = 1; i < r.size(); ++i) {
      EXPECT_LT(r[i - 1].first, r[i].first);
    }
    for (auto const& [g, c] : r) {
      EXPECT_NE(c, 0);
    }
  }
}

TEST(KTheory, AbGroupLiftAndCoordinatesInvert) {
  auto const p = build_presentation(monoid("proto2.monoid"), Flavor::all, 4);
  auto const s = smith(p);
  for (std::size_t i = 0; i < s.group.coords(); ++i) {
    auto const c = s.group.coordinates(s.group.lift(i));
    for (std::size_t j = 0; j < c.size(); ++j) {
      EXPECT_EQ(c[j], i == j ? 1 : 0);
    }
  }
}

TEST(KTheory, NSetGroupsAtBoundTwo) {
  auto const [fin, tails] = g0_nset_reports(2);
  EXPECT_EQ(fin.smith.group.free_rank, 3u);
  EXPECT_TRUE(fin.s0.has_value());
  EXPECT_EQ(fin.loops.size(), 2u);
  EXPECT_EQ(tails.smith.group.free_rank, 3u);
  ASSERT_TRUE(tails.s0.has_value());
  EXPECT_TRUE(tails.smith.group.is_zero(tails.smith.classes.classes[*tails.s0]));
  for (std::size_t k = 1; k <= 2; ++k) {
    auto const g = tails.presentation.find(fgn_key(FgNSet::from_finite(path_nset(k))));
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(tails.smith.group.is_zero(tails.smith.classes.classes[*g]));
  }
  // The point has class 0 in both.
  auto const pt = fgn_key(FgNSet::from_finite(path_nset(0)));
  EXPECT_TRUE(fin.smith.group.is_zero(fin.smith.classes.classes[*fin.presentation.find(pt)]));
  EXPECT_TRUE(tails.smith.group.is_zero(tails.smith.classes.classes[*tails.presentation.find(pt)]));
}

TEST(KTheory, NSetFreeRankMatchesOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (bool tails : {false, true}) {
      auto const p = build_nset_presentation(n, tails);
      EXPECT_EQ(smith(p).group.free_rank, oracle_free_rank(p));
      EXPECT_EQ(smith(p).group.free_rank, n + 1);
    }
  }
}

TEST(Burnside, TrivialGroup) {
  auto const r = burnside(cyclic_group(1));
  EXPECT_EQ(r.free_rank, 1u);
  EXPECT_EQ(r.marks, (std::vector<std::vector<std::int64_t>>{{1}}));
}

TEST(Burnside, Z2) {
  auto const r = burnside(cyclic_group(2));
  EXPECT_EQ(r.free_rank, 2u);
  EXPECT_EQ(r.marks, (std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}}));
  EXPECT_EQ(r.product[0][0], (std::vector<std::int64_t>{2, 0}));
  EXPECT_TRUE(r.transitive_basis);
}

TEST(Burnside, S3) {
  auto const r = burnside(symmetric_group(3));
  EXPECT_EQ(r.free_rank, 4u);
  std::vector<std::int64_t> first;
  for (auto const& row : r.marks) {
    first.push_back(row[0]);
  }
  EXPECT_EQ(first, (std::vector<std::int64_t>{6, 3, 2, 1}));
  EXPECT_TRUE(r.marks_multiplicative);
}

TEST(Burnside, ProductsAreCommutative) {
  auto const r = burnside(cyclic_group(4));
  for (std::size_t i = 0; i < r.product.size(); ++i) {
    for (std::size_t j = 0; j < r.product.size(); ++j) {
      EXPECT_EQ(r.product[i][j], r.product[j][i]);
    }
  }
}

TEST(Devissage, PassesOnFiniteLengthMonoids) {
  for (char const* f : {"ntr2.monoid", "ntr3.monoid", "z2plus_ntr2.monoid", "z3plus_twisted2.monoid"}) {
    auto const r = devissage_check(monoid(f), 4);
    EXPECT_TRUE(r.passed()) << f;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Devissage, RejectsNonPc) {
  EXPECT_THROW(devissage_check(monoid("proto2.monoid"), 3), NotPc);
}

TEST(Localization, Nt2AtT) {
  auto const r = localization_check(monoid("ntr2.monoid"), 2, 2, 5);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.final_stage().localized_group, "0");
}

TEST(Localization, InvertingOneIsExact) {
  auto const r = localization_check(monoid("ntr3.monoid"), 1, 2, 5);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.final_stage().quotient_group, "0");
}

TEST(Localization, PrototypeIsNotPc) {
  auto const r = localization_check(monoid("proto2.monoid"), 2, 2, 4);
  EXPECT_FALSE(r.ambient_pc);
  EXPECT_FALSE(r.final_stage().j_surjective);
}

TEST(Localization, RejectsNonAbelian) {
  EXPECT_THROW(localization_check(monoid("z3plus_twisted2.monoid"), 1, 2, 3), NotAbelian);
}

TEST(Stabilization, F1IsConstant) {
  auto const rows = stabilization_scan(monoid("f1.monoid"), Flavor::pc, 1, 5);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_FALSE(rows[0].iso_from_previous.has_value());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].free_rank, 1u);
    EXPECT_EQ(rows[i].iso_from_previous, true);
  }
}
