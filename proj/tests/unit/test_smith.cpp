#include <gtest/gtest.h>

#include "kprime/rng.hpp"
#include "kprime/smith.hpp"
#include "oracles.hpp"

using namespace kprime;

namespace {

  IntMatrix mat(std::vector<std::vector<std::int64_t>> const& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  std::vector<std::vector<std::int64_t>> random_rows(Rng& rng, std::size_t r, std::size_t c) {
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows) {
      for (auto& v : row) {
        v = static_cast<std::int64_t>(rng.below(19)) - 9;
      }
    }
    return rows;
  }

  void expect_valid_smith(IntMatrix const& a, SmithForm const& s) {
    IntMatrix const d = s.u * a * s.v;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        Integer const expected = i == j ? s.diagonal[i] : Integer(0);
        ASSERT_EQ(d.at(i, j), expected);
      }
    }
    EXPECT_TRUE((s.u * s.u_inv).is_identity());
    EXPECT_TRUE((s.v * s.v_inv).is_identity());
    Integer const du = determinant(s.u), dv = determinant(s.v);
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_TRUE(dv == 1 || dv == -1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      EXPECT_GE(s.diagonal[i], 0);
      if (s.diagonal[i + 1] != 0) {
        EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      }
    }
  }

}  // namespace

TEST(Smith, TextbookExample) {
  auto const s = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(s.rank, 3u);
}

TEST(Smith, CoprimeDiagonalCombines) {
  auto const s = smith_normal_form(mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 6}));
}

TEST(Smith, ZeroAndRectangular) {
  auto const z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.rank, 0u);
  auto const r = smith_normal_form(mat({{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(r.diagonal, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Smith, RandomMatricesSatisfyInvariants) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    std::size_t const r    = 1 + rng.below(5);
    std::size_t const c    = 1 + rng.below(6);
    auto const        rows = random_rows(rng, r, c);
    auto const        a    = mat(rows);
    auto const        s    = smith_normal_form(a);
    expect_valid_smith(a, s);
    EXPECT_EQ(s.rank, oracle::rational_rank(rows));
    if (r == c) {
      Integer prod = 1;
      for (auto const& d : s.diagonal) {
        prod *= d;
      }
      Integer det = oracle::leibniz(rows);
      EXPECT_EQ(prod, det < 0 ? Integer(-det) : det);
    }
  }
}

TEST(Smith, LargeEntriesStayExact) {
  // 2^70 and 3^40 need more than 64 bits.
  Integer const big1 = Integer(1) << 70;
  Integer       big2 = 1;
  for (int i = 0; i < 40; ++i) {
    big2 *= 3;
  }
  IntMatrix a(2, 2);
  a.at(0, 0) = big1;
  a.at(1, 1) = big2;
  auto const s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal[0], 1);
  EXPECT_EQ(s.diagonal[1], big1 * big2);
}

TEST(Determinant, MatchesLeibniz) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    std::size_t const n    = 1 + rng.below(5);
    auto const        rows = random_rows(rng, n, n);
    EXPECT_EQ(determinant(mat(rows)), oracle::leibniz(rows));
  }
}

TEST(LeftKernel, RowsAnnihilateAndSpanCorrectDimension) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::size_t const r    = 1 + rng.below(6);
    std::size_t const c    = 1 + rng.below(4);
    auto const        rows = random_rows(rng, r, c);
    auto const        m    = mat(rows);
    auto const        k    = left_kernel(m);
    EXPECT_EQ(k.size(), r - oracle::rational_rank(rows));
    for (auto const& x : k) {
      for (std::size_t j = 0; j < c; ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < r; ++i) {
          sum += x[i] * m.at(i, j);
        }
        EXPECT_EQ(sum, 0);
      }
    }
  }
}

TEST(Lattice, InsertAndMembership) {
  Lattice l(3);
  EXPECT_TRUE(l.insert({2, 0, 0}));
  EXPECT_TRUE(l.insert({0, 3, 0}));
  EXPECT_FALSE(l.insert({4, 6, 0}));
  EXPECT_TRUE(l.contains({2, 3, 0}));
  EXPECT_FALSE(l.contains({1, 0, 0}));
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_TRUE(l.insert({1, 0, 0}));
  EXPECT_TRUE(l.contains({1, 0, 0}));
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_TRUE(l.insert_sparse({{2, Integer(5)}}));
  EXPECT_EQ(l.rank(), 3u);
}

TEST(Lattice, HermiteBasisSpansSameRowSpace) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto const rows = random_rows(rng, 1 + rng.below(5), 4);
    Lattice    l(4);
    for (auto const& r : rows) {
      l.insert(std::vector<Integer>(r.begin(), r.end()));
    }
    EXPECT_EQ(l.rank(), oracle::rational_rank(rows));
    for (auto const& r : rows) {
      EXPECT_TRUE(l.contains(std::vector<Integer>(r.begin(), r.end())));
    }
    // The basis has the same invariant factors as the input rows.
    auto const b = l.basis();
    if (b.rows() > 0) {
      auto       sa = smith_normal_form(mat(rows)).diagonal;
      auto       sb = smith_normal_form(b).diagonal;
      auto const nz = [](std::vector<Integer> v) {
        std::erase(v, Integer(0));
        return v;
      };
      EXPECT_EQ(nz(sa), nz(sb));
    }
  }
}
