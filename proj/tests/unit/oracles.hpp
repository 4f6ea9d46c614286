#pragma once

// Brute-force reference implementations used to freeze expected values.
// They share no code with the library beyond the table accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "kprime/aset.hpp"
#include "kprime/monoid.hpp"
#include "kprime/smith.hpp"

namespace oracle {

  using kprime::Elem;

  // Least relabelled table over all permutations of the non-base points.
  inline std::vector<Elem> min_relabel(std::size_t m, std::size_t k, std::vector<Elem> const& maps) {
    std::vector<Elem> perm(m);
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::vector<Elem> best;
    do {
      std::vector<Elem> t(maps.size());
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t x = 0; x < m; ++x) {
          t[j * m + perm[x]] = perm[maps[j * m + x]];
        }
      }
      if (best.empty() || t < best) {
        best = t;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  }

  inline bool pc_action(kprime::FiniteMonoid const& a, std::size_t m, std::vector<Elem> const& act) {
    for (Elem x = 1; x < m; ++x) {
      for (Elem p = 0; p < a.size(); ++p) {
        for (Elem q = p + 1; q < a.size(); ++q) {
          if (act[p * m + x] == act[q * m + x] && act[p * m + x] != 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Isomorphism classes of A-sets with exactly `rank` non-base points, by
  // trying every assignment of self-maps to the elements other than * and 1.
  inline std::size_t aset_classes(kprime::FiniteMonoid const& a, std::size_t rank, bool pc_only) {
    std::size_t const m = rank + 1;
    std::size_t const n = a.size();
    std::vector<Elem> free_elems;
    for (Elem e = 0; e < n; ++e) {
      if (e != a.star() && e != a.one()) {
        free_elems.push_back(e);
      }
    }
    std::size_t const slots = free_elems.size() * rank;
    std::vector<Elem> digits(slots, 0);
    std::set<std::vector<Elem>> classes;
    while (true) {
      std::vector<Elem> act(n * m, 0);
      for (Elem x = 0; x < m; ++x) {
        act[a.one() * m + x] = x;
        act[a.star() * m + x] = 0;
      }
      for (std::size_t i = 0; i < free_elems.size(); ++i) {
        for (std::size_t x = 1; x < m; ++x) {
          act[free_elems[i] * m + x] = digits[i * rank + x - 1];
        }
      }
      bool ok = true;
      for (Elem p = 0; p < n && ok; ++p) {
        for (Elem q = 0; q < n && ok; ++q) {
          for (Elem x = 0; x < m && ok; ++x) {
            ok = act[a.mul(p, q) * m + x] == act[p * m + act[q * m + x]];
          }
        }
      }
      if (ok && (!pc_only || pc_action(a, m, act))) {
        classes.insert(min_relabel(m, n, act));
      }
      std::size_t i = 0;
      while (i < slots && ++digits[i] == m) {
        digits[i++] = 0;
      }
      if (i == slots) {
        break;
      }
    }
    return classes.size();
  }

  // Isomorphism classes of functional graphs on rank non-base points with
  // the base fixed.
  inline std::size_t nset_classes(std::size_t rank) {
    std::size_t const m = rank + 1;
    std::vector<Elem> succ(m, 0);
    std::set<std::vector<Elem>> classes;
    while (true) {
      classes.insert(min_relabel(m, 1, succ));
      std::size_t i = 1;
      while (i < m && ++succ[i] == m) {
        succ[i++] = 0;
      }
      if (i >= m) {
        break;
      }
    }
    return classes.size();
  }

  // Rank over Q by cross-multiplying elimination on exact integers.
  inline std::size_t rational_rank(std::vector<std::vector<std::int64_t>> const& rows_in) {
    using kprime::Integer;
    std::vector<std::vector<Integer>> rows;
    for (auto const& r : rows_in) {
      rows.emplace_back(r.begin(), r.end());
    }
    std::size_t       rank = 0;
    std::size_t const cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][c] == 0) {
        ++p;
      }
      if (p == rows.size()) {
        continue;
      }
      std::swap(rows[p], rows[rank]);
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        Integer const f = rows[i][c];
        if (f == 0) {
          continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
          rows[i][j] = rows[i][j] * rows[rank][c] - f * rows[rank][j];
        }
      }
      ++rank;
    }
    return rank;
  }

  // Leibniz determinant.
  inline kprime::Integer leibniz(std::vector<std::vector<std::int64_t>> const& m) {
    std::size_t const n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    kprime::Integer total = 0;
    do {
      int sign = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (p[i] > p[j]) {
            sign = -sign;
          }
        }
      }
      kprime::Integer term = sign;
      for (std::size_t i = 0; i < n; ++i) {
        term *= m[i][p[i]];
      }
      total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
  }

  // Partial cancellativity on all triples.
  inline bool pc_monoid(kprime::FiniteMonoid const& a) {
    std::size_t const n = a.size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem c = 0; c < n; ++c) {
          if (x == y) {
            continue;
          }
          Elem const r = a.mul(x, c);
          Elem const l = a.mul(c, x);
          if ((r != 0 && r == a.mul(y, c)) || (l != 0 && l == a.mul(c, y))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace oracle
