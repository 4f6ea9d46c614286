#include <gtest/gtest.h>

#include "kprime/errors.hpp"
#include "kprime/group.hpp"
#include "kprime/verify.hpp"

using namespace kprime;

namespace {

  std::vector<std::vector<std::size_t>> rows_of(FiniteGroup const& g) {
    std::vector<std::vector<std::size_t>> rows(g.size(), std::vector<std::size_t>(g.size()));
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        rows[a][b] = g.mul(a, b);
      }
    }
    return rows;
  }

}  // namespace

TEST(Group, CyclicAndSymmetric) {
  auto const z4 = cyclic_group(4);
  EXPECT_TRUE(z4.is_abelian());
  EXPECT_EQ(z4.mul(3, 3), 2u);
  EXPECT_EQ(z4.inverse(1), 3u);
  auto const s3 = symmetric_group(3);
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_FALSE(s3.is_abelian());
}

TEST(Group, RejectsBadTables) {
  // Row 1 repeats an element, so 1 has no inverse.
  EXPECT_THROW(FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(FiniteGroup::from_table("ragged", {{0, 1}, {1}}), Error);
}

TEST(Group, SubgroupCounts) {
  EXPECT_EQ(subgroups(cyclic_group(4)).size(), 3u);
  EXPECT_EQ(subgroups(symmetric_group(3)).size(), 6u);
  EXPECT_EQ(subgroup_class_representatives(symmetric_group(3)).size(), 4u);
  auto const v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(subgroup_class_representatives(v4).size(), 5u);
}

TEST(Group, ClassRepresentativesMatchBruteForce) {
  std::vector<FiniteGroup> const groups{
      cyclic_group(1), cyclic_group(2), cyclic_group(5), cyclic_group(6),
      symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(4)),
      direct_product(cyclic_group(2), symmetric_group(3))};
  for (auto const& g : groups) {
    EXPECT_EQ(subgroup_class_representatives(g).size(), verify::subgroup_class_count(rows_of(g)))
        << g.name();
  }
}

TEST(Group, RepresentativeOrderIsTrivialFirstWholeLast) {
  auto const reps = subgroup_class_representatives(symmetric_group(3));
  EXPECT_EQ(reps.front().size(), 1u);
  EXPECT_EQ(reps.back().size(), 6u);
}

TEST(Group, ConjugateOfSubgroupIsSubgroupOfSameOrder) {
  auto const s3 = symmetric_group(3);
  for (auto const& h : subgroups(s3)) {
    for (std::size_t g = 0; g < s3.size(); ++g) {
      auto const c = conjugate(s3, h, g);
      EXPECT_EQ(c.size(), h.size());
    }
  }
}
