#include <gtest/gtest.h>

#include <filesystem>

#include "kprime/builders.hpp"
#include "kprime/errors.hpp"
#include "kprime/monoid.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kprime;
using testing_support::monoid;

TEST(Monoid, F1AndZero) {
  auto const f1 = make_f1();
  EXPECT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1.mul(1, 1), 1u);
  EXPECT_EQ(f1.mul(0, 1), 0u);

  auto const z = make_zero_monoid();
  EXPECT_EQ(z.size(), 1u);
  EXPECT_EQ(z.one(), z.star());
}

TEST(Monoid, TruncatedPolynomialPowers) {
  auto const m = make_truncated_polynomial(3);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m.power(2, 0), 1u);
  EXPECT_EQ(m.power(2, 2), 3u);
  EXPECT_EQ(m.power(2, 3), 0u);
  EXPECT_TRUE(m.is_commutative());
}

TEST(Monoid, RejectsInvalidTables) {
  using Rows = std::vector<std::vector<Elem>>;
  EXPECT_THROW(FiniteMonoid::from_rows("ragged", Rows{{0, 0}, {0}}), MalformedTable);
  EXPECT_THROW(FiniteMonoid::from_rows("range", Rows{{0, 0}, {0, 5}}), MalformedTable);
  EXPECT_THROW(FiniteMonoid::from_rows("zero", Rows{{0, 1}, {1, 1}}), BadZero);
  EXPECT_THROW(FiniteMonoid::from_rows("unit", Rows{{0, 0, 0}, {0, 2, 2}, {0, 2, 2}}), BadUnit);
  // a*a = b, b*a = a: (a*b)*a = * but a*(b*a) = b.
  EXPECT_THROW(FiniteMonoid::from_rows("assoc", Rows{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 0}, {0, 3, 2, 0}}),
               NonAssociative);
}

TEST(Monoid, PcExamples) {
  EXPECT_TRUE(is_pc_monoid(make_f1()).holds);
  EXPECT_TRUE(is_pc_monoid(make_truncated_polynomial(4)).holds);
  EXPECT_TRUE(is_pc_monoid(make_group_monoid(cyclic_group(3))).holds);
  EXPECT_FALSE(is_pc_monoid(make_prototype(2)).holds);
  auto const idem = is_pc_monoid(make_idempotent_monoid());
  ASSERT_FALSE(idem.holds);
  ASSERT_TRUE(idem.witness.has_value());
  auto const [a, b, c] = *idem.witness;
  auto const m         = make_idempotent_monoid();
  EXPECT_NE(a, b);
  EXPECT_TRUE((m.mul(a, c) == m.mul(b, c) && m.mul(a, c) != 0)
              || (m.mul(c, a) == m.mul(c, b) && m.mul(c, a) != 0));
}

TEST(Monoid, PcAgreesWithOracleOnCorpus) {
  for (auto const& e : std::filesystem::directory_iterator(KPRIME_CORPUS_DIR)) {
    if (e.path().extension() != ".monoid") {
      continue;
    }
    auto const m = monoid(e.path().filename().string());
    EXPECT_EQ(is_pc_monoid(*m).holds, oracle::pc_monoid(*m)) << m->name();
  }
}

TEST(Monoid, FiniteLength) {
  EXPECT_EQ(finite_length(make_f1()), 1u);
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(finite_length(make_truncated_polynomial(n)), n);
  }
  EXPECT_EQ(finite_length(make_group_monoid(symmetric_group(3))), 1u);
  EXPECT_EQ(finite_length(*monoid("ntr2_ntr2.monoid")), 3u);
  EXPECT_THROW(finite_length(make_prototype(1)), NotPc);
}

TEST(Monoid, Units) {
  EXPECT_EQ(units(make_group_monoid(cyclic_group(3))).group.size(), 3u);
  EXPECT_EQ(units(make_truncated_polynomial(3)).group.size(), 1u);
  EXPECT_EQ(units(*monoid("ntr3_z2plus.monoid")).group.size(), 2u);
}

TEST(Monoid, SmashSizesAndUnit) {
  auto const a = make_truncated_polynomial(2);
  auto const s = smash(a, a);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_TRUE(isomorphic(smash(make_f1(), a), a));
  EXPECT_TRUE(is_pc_monoid(s).holds);
}

TEST(Monoid, QuotientByMaximalIdeal) {
  auto const a = share(make_truncated_polynomial(3));
  auto const q = quotient_monoid(a, maximal_ideal(*a));
  EXPECT_TRUE(isomorphic(*q.monoid, make_f1()));
  Elem const one = 1;
  auto const all = quotient_monoid(a, ideal_generated(*a, std::span<Elem const>(&one, 1)));
  EXPECT_EQ(all.monoid->size(), 1u);
}

TEST(Monoid, Localization) {
  auto const ntr2 = share(make_truncated_polynomial(2));
  EXPECT_EQ(localize(ntr2, 2).monoid->size(), 1u);
  auto const ntr3 = share(make_truncated_polynomial(3));
  EXPECT_TRUE(isomorphic(*localize(ntr3, 1).monoid, *ntr3));
  // t^2 = t^3 and t^2 ~ 1 force t = 1.
  auto const proto = share(make_prototype(2));
  EXPECT_TRUE(isomorphic(*localize(proto, 2).monoid, make_f1()));
}

TEST(Monoid, PowerCycle) {
  auto const c = power_cycle(make_cyclic_monoid(2, 3), 2);
  EXPECT_EQ(c.index, 2u);
  EXPECT_EQ(c.period, 3u);
}

TEST(Monoid, TwistedExtension) {
  auto const g  = cyclic_group(3);
  auto const gp = share(make_group_monoid(g));
  auto const t  = twisted_truncated_extension(group_inversion(gp, g), 2);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_FALSE(t.is_commutative());
  EXPECT_TRUE(is_pc_monoid(t).holds);
  EXPECT_EQ(finite_length(t), 2u);
  EXPECT_EQ(units(t).group.size(), 3u);
}

TEST(Monoid, IsomorphismIgnoresNames) {
  auto const a = make_truncated_polynomial(3);
  EXPECT_TRUE(isomorphic(a, a.renamed("other")));
  EXPECT_FALSE(isomorphic(a, make_prototype(2)));
}
