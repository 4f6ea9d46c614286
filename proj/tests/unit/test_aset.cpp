#include <gtest/gtest.h>

#include <map>

#include "kprime/aset.hpp"
#include "kprime/axioms.hpp"
#include "kprime/builders.hpp"
#include "kprime/errors.hpp"
#include "oracles.hpp"

using namespace kprime;

namespace {

  std::map<std::size_t, std::size_t> counts_by_rank(std::vector<FiniteASet> const& sets) {
    std::map<std::size_t, std::size_t> c;
    for (auto const& x : sets) {
      ++c[x.rank()];
    }
    return c;
  }

  struct EnumCase {
    char const*  name;
    FiniteMonoid monoid;
    std::size_t  max_rank;
  };

  std::vector<EnumCase> enum_cases() {
    return {{"F1", make_f1(), 4},
            {"N/t^2", make_truncated_polynomial(2), 4},
            {"N/t^3", make_truncated_polynomial(3), 3},
            {"proto1", make_prototype(1), 4},
            {"proto2", make_prototype(2), 3},
            {"(Z/2)+", make_group_monoid(cyclic_group(2)), 4},
            {"idem", make_idempotent_monoid(), 3}};
  }

}  // namespace

TEST(ASet, RegularAndFree) {
  auto const a = share(make_truncated_polynomial(3));
  auto const r = regular_aset(a);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_TRUE(is_free(r));
  EXPECT_TRUE(is_pc_aset(r).holds);
  auto const f = free_aset(a, 3);
  EXPECT_EQ(f.rank(), 9u);
  EXPECT_TRUE(is_free(f));
  EXPECT_FALSE(is_free(point_aset(a)) && point_aset(a).rank() > 0);
}

TEST(ASet, RejectsInvalidAction) {
  auto const a = share(make_truncated_polynomial(2));
  // t moves the base point.
  EXPECT_THROW(FiniteASet::from_rows(a, "bad", {{0, 0}, {0, 1}, {1, 0}}), InvalidAction);
  // t^2 = * but t t x = x.
  EXPECT_THROW(FiniteASet::from_rows(a, "bad", {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}), InvalidAction);
}

// Per-rank class counts against exhaustive search over action tables.
TEST(ASet, EnumerationMatchesBruteForce) {
  for (auto const& c : enum_cases()) {
    auto const a = share(c.monoid);
    for (auto const flavor : {ASetFlavor::all, ASetFlavor::pc}) {
      auto const counts = counts_by_rank(enumerate_asets(a, c.max_rank, flavor));
      for (std::size_t r = 0; r <= c.max_rank; ++r) {
        std::size_t const expected = oracle::aset_classes(c.monoid, r, flavor == ASetFlavor::pc);
        std::size_t const got      = counts.count(r) ? counts.at(r) : 0;
        EXPECT_EQ(got, expected) << c.name << " " << to_string(flavor) << " rank " << r;
      }
    }
  }
}

// Frozen from the brute-force oracle above.
TEST(ASet, EnumerationFrozenCounts) {
  auto const ntr2 = share(make_truncated_polynomial(2));
  auto const c    = counts_by_rank(enumerate_asets(ntr2, 3, ASetFlavor::all));
  EXPECT_EQ(c.at(0), 1u);
  EXPECT_EQ(c.at(1), 1u);
  EXPECT_EQ(c.at(2), 2u);
  EXPECT_EQ(c.at(3), 3u);
  auto const f1 = counts_by_rank(enumerate_asets(share(make_f1()), 5, ASetFlavor::all));
  for (std::size_t r = 0; r <= 5; ++r) {
    EXPECT_EQ(f1.at(r), 1u);
  }
}

TEST(ASet, FreeFlavorIsWedgesOfA) {
  auto const a    = share(make_group_monoid(cyclic_group(2)));
  auto const sets = enumerate_asets(a, 6, ASetFlavor::free);
  ASSERT_EQ(sets.size(), 4u);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    EXPECT_EQ(sets[k].rank(), 2 * k);
    EXPECT_TRUE(iso_test(sets[k], free_aset(a, k)).has_value());
  }
}

TEST(ASet, CanonicalKeyIsLabelInvariant) {
  for (auto const& c : enum_cases()) {
    auto const a = share(c.monoid);
    Rng        rng(7);
    for (int i = 0; i < 100; ++i) {
      auto const x   = random_aset(a, rng, 6);
      auto const iso = random_iso(x, rng);
      EXPECT_EQ(canonical_key(x), canonical_key(iso.target));
      auto const found = iso_test(x, iso.target);
      ASSERT_TRUE(found.has_value());
      EXPECT_NO_THROW(make_aset_map(x, iso.target, *found));
    }
  }
}

TEST(ASet, DistinctClassesHaveDistinctKeys) {
  auto const a    = share(make_truncated_polynomial(3));
  auto const sets = enumerate_asets(a, 3, ASetFlavor::all);
  std::set<std::string> keys;
  for (auto const& x : sets) {
    keys.insert(canonical_key(x));
  }
  EXPECT_EQ(keys.size(), sets.size());
}

TEST(ASet, PcAgreesWithOracle) {
  for (auto const& c : enum_cases()) {
    auto const a = share(c.monoid);
    Rng        rng(11);
    for (int i = 0; i < 100; ++i) {
      auto const x = random_aset(a, rng, 6);
      EXPECT_EQ(is_pc_aset(x).holds, oracle::pc_action(c.monoid, x.size(), x.table())) << c.name;
    }
  }
}

TEST(ASet, QuotientAndSubobjectSizes) {
  auto const a = share(make_truncated_polynomial(3));
  Rng        rng(3);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_aset(a, rng, 7);
    auto const y = random_subset(x, rng);
    auto const q = quotient_aset(x, y);
    auto const s = restrict_to(x, y);
    EXPECT_EQ(q.set.size(), x.size() - y.size() + 1);
    EXPECT_EQ(s.set.size(), y.size());
    EXPECT_TRUE(is_admissible_monic(s.inclusion));
    EXPECT_TRUE(is_admissible_epi(q.projection));
    EXPECT_TRUE(is_admissible_sequence(s.inclusion, q.projection));
    EXPECT_EQ(kernel(q.projection), y);
    EXPECT_EQ(image(s.inclusion).size(), y.size());
  }
}

TEST(ASet, LatticeOperationsAreClosed) {
  auto const a = share(make_group_monoid(cyclic_group(3)));
  Rng        rng(5);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_aset(a, rng, 7);
    auto const y = random_subset(x, rng);
    auto const z = random_subset(x, rng);
    auto const u = subset_union(y, z);
    auto const n = subset_intersection(y, z);
    EXPECT_NO_THROW(ASubset::make(x, u.members()));
    EXPECT_NO_THROW(ASubset::make(x, n.members()));
    EXPECT_EQ(u.size() + n.size(), y.size() + z.size());
    EXPECT_TRUE(n.is_subset_of(y) && y.is_subset_of(u));
  }
}

TEST(ASet, SubsetsOfRegularNt3AreThePowerIdeals) {
  auto const a = share(make_truncated_polynomial(3));
  // {*}, {*, t^2}, {*, t, t^2}, A.
  EXPECT_EQ(all_subsets(regular_aset(a)).size(), 4u);
}

TEST(ASet, WedgeAndCollapse) {
  auto const a = share(make_truncated_polynomial(2));
  auto const w = wedge(regular_aset(a), free_aset(a, 2));
  EXPECT_EQ(w.set.rank(), 6u);
  EXPECT_TRUE(is_admissible_monic(w.left));
  EXPECT_TRUE(is_admissible_epi(w.collapse_left));
  EXPECT_TRUE(is_free(w.set));
}

TEST(ASet, NoetherWitnessIsAnIsomorphism) {
  auto const a = share(make_truncated_polynomial(3));
  Rng        rng(9);
  for (int i = 0; i < 100; ++i) {
    auto const x = random_aset(a, rng, 7);
    auto const y = random_subset(x, rng);
    auto const z = random_subset(x, rng);
    EXPECT_TRUE(is_bijective(noether_witness(x, y, z)));
  }
}

TEST(ASet, BaseChangeAlongIdentityIsIsomorphic) {
  auto const a = share(make_truncated_polynomial(3));
  Rng        rng(13);
  for (int i = 0; i < 50; ++i) {
    auto const x = random_aset(a, rng, 6);
    EXPECT_TRUE(iso_test(x, base_change(identity_map(a), x)).has_value());
  }
}

TEST(ASet, RestrictionAlongQuotientKeepsPoints) {
  auto const a = share(make_truncated_polynomial(3));
  auto const q = quotient_monoid(a, maximal_ideal(*a));
  auto const y = free_aset(q.monoid, 2);
  auto const r = restrict_scalars(q.projection, y);
  EXPECT_EQ(r.size(), y.size());
  EXPECT_TRUE(is_pc_aset(r).holds);
}
