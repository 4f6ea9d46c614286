#include "kprime/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "kprime/errors.hpp"

namespace kprime {

  FiniteGroup FiniteGroup::from_table(std::string                            name,
                                      std::vector<std::vector<std::size_t>> const& rows) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw MalformedTable("group table is empty");
    }
    FiniteGroup g;
    g._name = std::move(name);
    g._n    = n;
    g._table.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw MalformedTable("group table is not square");
      }
      for (auto x : row) {
        if (x >= n) {
          throw MalformedTable("group table entry out of range");
        }
        g._table.push_back(x);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (g.mul(0, a) != a || g.mul(a, 0) != a) {
        throw MalformedTable("index 0 is not the identity of the group");
      }
    }
    g._inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g._inverse[a] = b;
          break;
        }
      }
      if (g._inverse[a] == n) {
        throw MalformedTable("group element " + std::to_string(a) + " has no inverse");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            throw NonAssociative(a, b, c);
          }
        }
      }
    }
    return g;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = a + 1; b < _n; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rows[a][b] = (a + b) % n;
      }
    }
    return FiniteGroup::from_table("Z" + std::to_string(n), rows);
  }

  FiniteGroup symmetric_group(std::size_t k) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index[perms[i]] = i;
    }
    std::size_t const                     n = perms.size();
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    std::vector<std::size_t>              composed(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < k; ++i) {
          composed[i] = perms[a][perms[b][i]];
        }
        rows[a][b] = index.at(composed);
      }
    }
    return FiniteGroup::from_table("S" + std::to_string(k), rows);
  }

  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
    std::size_t const                     n = g.size() * h.size();
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rows[a][b] = g.mul(a / h.size(), b / h.size()) * h.size()
                     + h.mul(a % h.size(), b % h.size());
      }
    }
    return FiniteGroup::from_table(g.name() + "x" + h.name(), rows);
  }

  namespace {
    std::vector<std::size_t> close_subgroup(FiniteGroup const& g, std::vector<bool> mask) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t a = 0; a < g.size(); ++a) {
          if (!mask[a]) {
            continue;
          }
          for (std::size_t b = 0; b < g.size(); ++b) {
            if (mask[b] && !mask[g.mul(a, b)]) {
              mask[g.mul(a, b)] = true;
              changed           = true;
            }
          }
        }
      }
      std::vector<std::size_t> out;
      for (std::size_t a = 0; a < g.size(); ++a) {
        if (mask[a]) {
          out.push_back(a);
        }
      }
      return out;
    }

    bool subgroup_less(std::vector<std::size_t> const& x, std::vector<std::size_t> const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x < y;
    }
  }  // namespace

  std::vector<std::vector<std::size_t>> subgroups(FiniteGroup const& g) {
    std::set<std::vector<std::size_t>>    seen{{0}};
    std::vector<std::vector<std::size_t>> queue{{0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto const current = queue[i];
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (std::binary_search(current.begin(), current.end(), x)) {
          continue;
        }
        std::vector<bool> mask(g.size(), false);
        for (auto y : current) {
          mask[y] = true;
        }
        mask[x]   = true;
        auto next = close_subgroup(g, std::move(mask));
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
  }

  std::vector<std::size_t> conjugate(FiniteGroup const&               g,
                                     std::vector<std::size_t> const& subgroup,
                                     std::size_t                      by) {
    std::vector<std::size_t> out;
    out.reserve(subgroup.size());
    for (auto h : subgroup) {
      out.push_back(g.mul(g.mul(by, h), g.inverse(by)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<std::size_t>>
  subgroup_class_representatives(FiniteGroup const& g) {
    std::vector<std::vector<std::size_t>> reps;
    std::set<std::vector<std::size_t>>    covered;
    for (auto const& h : subgroups(g)) {
      if (covered.count(h) != 0) {
        continue;
      }
      reps.push_back(h);
      for (std::size_t x = 0; x < g.size(); ++x) {
        covered.insert(conjugate(g, h, x));
      }
    }
    return reps;
  }

}  // namespace kprime
