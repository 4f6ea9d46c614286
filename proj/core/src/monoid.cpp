#include "kprime/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "kprime/errors.hpp"
#include "union_find.hpp"

namespace kprime {

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid FiniteMonoid::from_rows(std::string                          name,
                                       std::vector<std::vector<Elem>> const& rows) {
    std::size_t const n = rows.size();
    std::vector<Elem> table;
    table.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw MalformedTable("multiplication table is not square");
      }
      table.insert(table.end(), row.begin(), row.end());
    }
    return from_table(std::move(name), n, std::move(table));
  }

  FiniteMonoid FiniteMonoid::from_table(std::string name, std::size_t n, std::vector<Elem> table) {
    if (n == 0) {
      throw MalformedTable("a pointed monoid needs at least the element *");
    }
    if (table.size() != n * n) {
      throw MalformedTable("multiplication table has " + std::to_string(table.size())
                           + " entries, expected " + std::to_string(n * n));
    }
    for (auto x : table) {
      if (x >= n) {
        throw MalformedTable("multiplication table entry " + std::to_string(x)
                             + " out of range");
      }
    }
    FiniteMonoid m(std::move(name), n, std::move(table));
    // Associativity is checked first: with * and 1 behaving, every table on
    // three or fewer elements is associative.
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab = m.mul(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (m.mul(ab, c) != m.mul(a, m.mul(b, c))) {
            throw NonAssociative(a, b, c);
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (m.mul(0, a) != 0 || m.mul(a, 0) != 0) {
        throw BadZero(a);
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (m.mul(m.one(), a) != a || m.mul(a, m.one()) != a) {
        throw BadUnit(a);
      }
    }
    return m;
  }

  FiniteMonoid FiniteMonoid::renamed(std::string name) const {
    return FiniteMonoid(std::move(name), _n, _table);
  }

  bool FiniteMonoid::is_commutative() const {
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = a + 1; b < _n; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Elem FiniteMonoid::power(Elem a, std::size_t k) const {
    Elem r = one();
    for (std::size_t i = 0; i < k; ++i) {
      r = mul(r, a);
    }
    return r;
  }

  FiniteMonoid validate_monoid(std::string name, std::vector<std::vector<Elem>> const& rows) {
    return FiniteMonoid::from_rows(std::move(name), rows);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  MonoidMap make_monoid_map(MonoidPtr source, MonoidPtr target, std::vector<Elem> map) {
    if (map.size() != source->size()) {
      throw NotHomomorphism("map has the wrong number of entries");
    }
    for (auto x : map) {
      if (x >= target->size()) {
        throw NotHomomorphism("map entry out of range");
      }
    }
    if (map[source->star()] != target->star()) {
      throw NotHomomorphism("map does not preserve *");
    }
    if (map[source->one()] != target->one()) {
      throw NotHomomorphism("map does not preserve 1");
    }
    for (Elem a = 0; a < source->size(); ++a) {
      for (Elem b = 0; b < source->size(); ++b) {
        if (map[source->mul(a, b)] != target->mul(map[a], map[b])) {
          throw NotHomomorphism("map does not preserve the product of " + std::to_string(a)
                                + " and " + std::to_string(b));
        }
      }
    }
    return MonoidMap{std::move(source), std::move(target), std::move(map)};
  }

  MonoidMap identity_map(MonoidPtr m) {
    std::vector<Elem> id(m->size());
    std::iota(id.begin(), id.end(), Elem{0});
    return MonoidMap{m, m, std::move(id)};
  }

  MonoidMap compose(MonoidMap const& g, MonoidMap const& f) {
    std::vector<Elem> out(f.map.size());
    for (std::size_t a = 0; a < out.size(); ++a) {
      out[a] = g.map[f.map[a]];
    }
    return MonoidMap{f.source, g.target, std::move(out)};
  }

  bool is_automorphism(MonoidMap const& f) {
    if (!f.source->same_table(*f.target)) {
      return false;
    }
    std::vector<bool> hit(f.map.size(), false);
    for (auto x : f.map) {
      if (x >= hit.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    try {
      make_monoid_map(f.source, f.target, f.map);
    } catch (NotHomomorphism const&) {
      return false;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  Ideal Ideal::make(FiniteMonoid const& parent, std::vector<Elem> members) {
    std::vector<bool> mask(parent.size(), false);
    for (auto x : members) {
      if (x >= parent.size()) {
        throw NotClosed("ideal member out of range");
      }
      mask[x] = true;
    }
    if (!mask[parent.star()]) {
      throw NotClosed("an ideal must contain *");
    }
    for (Elem x = 0; x < parent.size(); ++x) {
      if (!mask[x]) {
        continue;
      }
      for (Elem a = 0; a < parent.size(); ++a) {
        if (!mask[parent.mul(a, x)] || !mask[parent.mul(x, a)]) {
          throw NotClosed("subset is not a two-sided ideal at " + std::to_string(x));
        }
      }
    }
    return Ideal(std::move(mask));
  }

  std::vector<Elem> Ideal::members() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _mask.size(); ++x) {
      if (_mask[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::size_t Ideal::size() const {
    return static_cast<std::size_t>(std::count(_mask.begin(), _mask.end(), true));
  }

  Ideal ideal_generated(FiniteMonoid const& m, std::span<Elem const> generators) {
    std::vector<bool> mask(m.size(), false);
    mask[m.star()] = true;
    for (auto g : generators) {
      for (Elem a = 0; a < m.size(); ++a) {
        for (Elem b = 0; b < m.size(); ++b) {
          mask[m.mul(m.mul(a, g), b)] = true;
        }
      }
    }
    std::vector<Elem> members;
    for (Elem x = 0; x < m.size(); ++x) {
      if (mask[x]) {
        members.push_back(x);
      }
    }
    return Ideal::make(m, std::move(members));
  }

  Ideal ideal_product(FiniteMonoid const& m, Ideal const& i, Ideal const& j) {
    std::vector<bool> mask(m.size(), false);
    mask[m.star()] = true;
    for (Elem x = 0; x < m.size(); ++x) {
      if (!i.contains(x)) {
        continue;
      }
      for (Elem y = 0; y < m.size(); ++y) {
        if (j.contains(y)) {
          mask[m.mul(x, y)] = true;
        }
      }
    }
    std::vector<Elem> members;
    for (Elem x = 0; x < m.size(); ++x) {
      if (mask[x]) {
        members.push_back(x);
      }
    }
    return Ideal::make(m, std::move(members));
  }

  ////////////////////////////////////////////////////////////////////////
  // pc, units, maximal ideal, length
  ////////////////////////////////////////////////////////////////////////

  Decision is_pc_monoid(FiniteMonoid const& m) {
    std::size_t const n = m.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem const right = m.mul(a, c);
          Elem const left  = m.mul(c, a);
          if ((right != m.star() && right == m.mul(b, c))
              || (left != m.star() && left == m.mul(c, b))) {
            return Decision{false, std::array<Elem, 3>{a, b, c}};
          }
        }
      }
    }
    return Decision{};
  }

  bool is_unit(FiniteMonoid const& m, Elem a) {
    for (Elem b = 0; b < m.size(); ++b) {
      if (m.mul(a, b) == m.one() && m.mul(b, a) == m.one()) {
        return true;
      }
    }
    return false;
  }

  UnitGroup units(FiniteMonoid const& m) {
    std::vector<Elem> elements{m.one()};
    for (Elem a = 0; a < m.size(); ++a) {
      if (a == m.one()) {
        continue;
      }
      // In a finite monoid a one-sided inverse is two-sided, so ab = 1 suffices.
      for (Elem b = 0; b < m.size(); ++b) {
        if (m.mul(a, b) == m.one()) {
          elements.push_back(a);
          break;
        }
      }
    }
    std::map<Elem, std::size_t> position;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      position[elements[i]] = i;
    }
    std::vector<std::vector<std::size_t>> rows(elements.size(),
                                               std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        rows[i][j] = position.at(m.mul(elements[i], elements[j]));
      }
    }
    return UnitGroup{FiniteGroup::from_table("U(" + m.name() + ")", rows),
                     std::move(elements)};
  }

  Ideal maximal_ideal(FiniteMonoid const& m) {
    auto pc = is_pc_monoid(m);
    if (!pc) {
      throw NotPc(*pc.witness);
    }
    std::vector<Elem> members{m.star()};
    for (Elem a = 0; a < m.size(); ++a) {
      if (a != m.star() && !is_unit(m, a)) {
        members.push_back(a);
      }
    }
    return Ideal::make(m, std::move(members));
  }

  std::optional<std::size_t> finite_length(FiniteMonoid const& m) {
    Ideal const       max = maximal_ideal(m);
    Ideal             current = max;
    std::size_t       n       = 1;
    while (true) {
      if (current.size() == 1) {
        return n;
      }
      Ideal next = ideal_product(m, current, max);
      if (next == current) {
        return std::nullopt;
      }
      current = std::move(next);
      ++n;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients by ideals and congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Quotient of m by a congruence given as a class id per element. Class ids
    // are renumbered so * and 1 come first and the rest follow their least
    // element.
    std::pair<FiniteMonoid, std::vector<Elem>>
    quotient_by_classes(FiniteMonoid const& m, std::vector<std::size_t> const& cls,
                        std::string name) {
      std::map<std::size_t, Elem> renumber;
      renumber[cls[m.star()]] = 0;
      if (renumber.count(cls[m.one()]) == 0) {
        renumber[cls[m.one()]] = 1;
      }
      for (Elem a = 0; a < m.size(); ++a) {
        if (renumber.count(cls[a]) == 0) {
          auto const next     = static_cast<Elem>(renumber.size());
          renumber[cls[a]] = next;
        }
      }
      std::size_t const k = renumber.size();
      std::vector<Elem> proj(m.size());
      std::vector<Elem> rep(k);
      for (Elem a = m.size(); a-- > 0;) {
        proj[a]      = renumber.at(cls[a]);
        rep[proj[a]] = a;
      }
      std::vector<Elem> table(k * k);
      for (Elem x = 0; x < k; ++x) {
        for (Elem y = 0; y < k; ++y) {
          table[x * k + y] = proj[m.mul(rep[x], rep[y])];
        }
      }
      return {FiniteMonoid::from_table(std::move(name), k, std::move(table)), std::move(proj)};
    }

  }  // namespace

  MonoidQuotient quotient_monoid(MonoidPtr const& a, Ideal const& i) {
    if (i.parent_size() != a->size()) {
      throw NotClosed("ideal belongs to a different monoid");
    }
    std::vector<std::size_t> cls(a->size());
    for (Elem x = 0; x < a->size(); ++x) {
      cls[x] = i.contains(x) ? 0 : x;
    }
    auto [q, proj] = quotient_by_classes(*a, cls, a->name() + "/I");
    auto qp        = share(std::move(q));
    return MonoidQuotient{qp, MonoidMap{a, qp, std::move(proj)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Localization
  ////////////////////////////////////////////////////////////////////////

  PowerCycle power_cycle(FiniteMonoid const& m, Elem s) {
    std::map<Elem, std::size_t> first_seen;
    Elem                        p = m.one();
    std::size_t                 k = 0;
    while (first_seen.count(p) == 0) {
      first_seen[p] = k;
      p             = m.mul(p, s);
      ++k;
    }
    std::size_t const index  = first_seen.at(p);
    std::size_t const period = k - index;
    std::size_t       e      = period;
    while (e < std::max<std::size_t>(index, 1)) {
      e += period;
    }
    return PowerCycle{index, period, m.power(s, e)};
  }

  DenominatorCheck check_denominator_set(FiniteMonoid const& m, Elem s) {
    auto const        cycle = power_cycle(m, s);
    std::vector<Elem> powers;
    for (std::size_t k = 0; k < cycle.index + cycle.period; ++k) {
      powers.push_back(m.power(s, k));
    }
    std::size_t const n = m.size();
    // Right Ore: a s^j = s^i b for some j, b. Left Ore: s^j a = b s^i.
    for (Elem a = 0; a < n; ++a) {
      for (auto p : powers) {
        bool right = false, left = false;
        for (auto q : powers) {
          for (Elem b = 0; b < n && !(right && left); ++b) {
            right = right || m.mul(a, q) == m.mul(p, b);
            left  = left || m.mul(q, a) == m.mul(b, p);
          }
        }
        if (!right) {
          return DenominatorCheck{false, "right Ore condition", a, p};
        }
        if (!left) {
          return DenominatorCheck{false, "left Ore condition", a, p};
        }
      }
    }
    // Reversibility: a s^i = b s^i forces s^j a = s^j b, and symmetrically.
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        for (auto p : powers) {
          if (m.mul(a, p) == m.mul(b, p)) {
            bool ok = std::any_of(powers.begin(), powers.end(), [&](Elem q) {
              return m.mul(q, a) == m.mul(q, b);
            });
            if (!ok) {
              return DenominatorCheck{false, "left reversibility", a, b};
            }
          }
          if (m.mul(p, a) == m.mul(p, b)) {
            bool ok = std::any_of(powers.begin(), powers.end(), [&](Elem q) {
              return m.mul(a, q) == m.mul(b, q);
            });
            if (!ok) {
              return DenominatorCheck{false, "right reversibility", a, b};
            }
          }
        }
      }
    }
    return DenominatorCheck{};
  }

  Localization localize(MonoidPtr const& a, Elem s) {
    if (s >= a->size()) {
      throw Error("element out of range");
    }
    auto check = check_denominator_set(*a, s);
    if (!check.holds) {
      throw NotDenominatorSet(check.condition, check.a, check.b);
    }
    auto const        cycle = power_cycle(*a, s);
    std::size_t const n     = a->size();
    detail::UnionFind uf(n);
    uf.unite(cycle.idempotent, a->one());
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem x = 0; x < n; ++x) {
        auto const r = static_cast<Elem>(uf.find(x));
        if (r == x) {
          continue;
        }
        for (Elem c = 0; c < n; ++c) {
          changed |= uf.unite(a->mul(c, x), a->mul(c, r));
          changed |= uf.unite(a->mul(x, c), a->mul(r, c));
        }
      }
    }
    std::vector<std::size_t> cls(n);
    for (Elem x = 0; x < n; ++x) {
      cls[x] = uf.find(x);
    }
    auto [q, proj] = quotient_by_classes(*a, cls, a->name() + "[1/" + std::to_string(s) + "]");
    auto qp        = share(std::move(q));
    return Localization{qp, MonoidMap{a, qp, std::move(proj)}, cycle};
  }

  ////////////////////////////////////////////////////////////////////////
  // Smash and twisted truncated extension
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid smash(FiniteMonoid const& a, FiniteMonoid const& b) {
    std::string name = a.name() + "^" + b.name();
    if (a.size() == 1 || b.size() == 1) {
      return FiniteMonoid::from_table(std::move(name), 1, {0});
    }
    // pairs[i] for i >= 1; index 0 is *.
    std::vector<std::pair<Elem, Elem>> pairs{{0, 0}, {a.one(), b.one()}};
    for (Elem x = 1; x < a.size(); ++x) {
      for (Elem y = 1; y < b.size(); ++y) {
        if (x != a.one() || y != b.one()) {
          pairs.emplace_back(x, y);
        }
      }
    }
    std::map<std::pair<Elem, Elem>, Elem> index;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      index[pairs[i]] = static_cast<Elem>(i);
    }
    std::size_t const n = pairs.size();
    std::vector<Elem> table(n * n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        Elem const x = a.mul(pairs[i].first, pairs[j].first);
        Elem const y = b.mul(pairs[i].second, pairs[j].second);
        table[i * n + j] = (x == 0 || y == 0) ? 0 : index.at({x, y});
      }
    }
    return FiniteMonoid::from_table(std::move(name), n, std::move(table));
  }

  FiniteMonoid twisted_truncated_extension(MonoidMap const& phi, std::size_t k) {
    if (!is_automorphism(phi)) {
      throw NotAutomorphism("twisting map is not a monoid automorphism");
    }
    if (k == 0) {
      throw Error("truncation degree must be positive");
    }
    FiniteMonoid const& a    = *phi.source;
    std::string         name = a.name() + "x|N/t^" + std::to_string(k);
    if (a.size() == 1) {
      return FiniteMonoid::from_table(std::move(name), 1, {0});
    }
    // (element, degree) pairs, ordered by degree then element with (1, 0) first.
    std::vector<std::pair<Elem, std::size_t>> elems{{0, 0}, {a.one(), 0}};
    for (std::size_t i = 0; i < k; ++i) {
      for (Elem x = 1; x < a.size(); ++x) {
        if (i != 0 || x != a.one()) {
          elems.emplace_back(x, i);
        }
      }
    }
    std::map<std::pair<Elem, std::size_t>, Elem> index;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      index[elems[i]] = static_cast<Elem>(i);
    }
    // phi^i as tables.
    std::vector<std::vector<Elem>> phi_pow{identity_map(phi.source).map};
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Elem> next(a.size());
      for (Elem x = 0; x < a.size(); ++x) {
        next[x] = phi.map[phi_pow.back()[x]];
      }
      phi_pow.push_back(std::move(next));
    }
    std::size_t const n = elems.size();
    std::vector<Elem> table(n * n, 0);
    for (std::size_t u = 1; u < n; ++u) {
      for (std::size_t v = 1; v < n; ++v) {
        auto const [x, i] = elems[u];
        auto const [y, j] = elems[v];
        if (i + j >= k) {
          continue;
        }
        Elem const z = a.mul(x, phi_pow[i][y]);
        if (z != 0) {
          table[u * n + v] = index.at({z, i + j});
        }
      }
    }
    return FiniteMonoid::from_table(std::move(name), n, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism and generators
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Signature = std::tuple<bool, std::size_t, std::size_t, bool, std::size_t,
                                 std::size_t, std::size_t>;

    Signature element_signature(FiniteMonoid const& m, Elem x) {
      auto const  cycle = power_cycle(m, x);
      std::size_t left_zero = 0, right_zero = 0, fixes = 0;
      for (Elem y = 0; y < m.size(); ++y) {
        left_zero += m.mul(x, y) == 0;
        right_zero += m.mul(y, x) == 0;
        fixes += m.mul(x, y) == y;
      }
      return {is_unit(m, x), cycle.index, cycle.period, m.mul(x, x) == x,
              left_zero,      right_zero,  fixes};
    }

    bool extend_iso(FiniteMonoid const& a, FiniteMonoid const& b,
                    std::vector<Signature> const& sa, std::vector<Signature> const& sb,
                    std::vector<Elem>& f, std::vector<bool>& used, Elem next) {
      std::size_t const n    = a.size();
      Elem const        none = static_cast<Elem>(n);
      if (next == n) {
        return true;
      }
      for (Elem cand = 0; cand < n; ++cand) {
        if (used[cand] || sa[next] != sb[cand]) {
          continue;
        }
        f[next]    = cand;
        used[cand] = true;
        bool ok    = true;
        for (Elem u = 0; u <= next && ok; ++u) {
          for (Elem v = 0; v <= next && ok; ++v) {
            if (u != next && v != next) {
              continue;
            }
            Elem const uv = a.mul(u, v);
            if (f[uv] != none && f[uv] != b.mul(f[u], f[v])) {
              ok = false;
            }
          }
        }
        // Products of earlier elements that land on `next`.
        for (Elem u = 0; u < next && ok; ++u) {
          for (Elem v = 0; v < next && ok; ++v) {
            if (a.mul(u, v) == next && b.mul(f[u], f[v]) != cand) {
              ok = false;
            }
          }
        }
        if (ok && extend_iso(a, b, sa, sb, f, used, next + 1)) {
          return true;
        }
        f[next]    = none;
        used[cand] = false;
      }
      return false;
    }

  }  // namespace

  std::optional<std::vector<Elem>> find_isomorphism(FiniteMonoid const& a,
                                                     FiniteMonoid const& b) {
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    std::size_t const      n = a.size();
    std::vector<Signature> sa, sb;
    for (Elem x = 0; x < n; ++x) {
      sa.push_back(element_signature(a, x));
      sb.push_back(element_signature(b, x));
    }
    auto ms = sa, mt = sb;
    std::sort(ms.begin(), ms.end());
    std::sort(mt.begin(), mt.end());
    if (ms != mt) {
      return std::nullopt;
    }
    Elem const        none = static_cast<Elem>(n);
    std::vector<Elem> f(n, none);
    std::vector<bool> used(n, false);
    f[0]    = 0;
    used[0] = true;
    Elem start = 1;
    if (n > 1) {
      f[1]    = 1;
      used[1] = true;
      start   = 2;
    }
    for (Elem u = 0; u < start; ++u) {
      for (Elem v = 0; v < start; ++v) {
        if (a.mul(u, v) < start && f[a.mul(u, v)] != b.mul(f[u], f[v])) {
          return std::nullopt;
        }
      }
    }
    if (extend_iso(a, b, sa, sb, f, used, start)) {
      return f;
    }
    return std::nullopt;
  }

  namespace {
    std::vector<bool> generated(FiniteMonoid const& m, std::vector<Elem> const& gens) {
      std::vector<bool> mask(m.size(), false);
      std::vector<Elem> queue{m.one()};
      mask[m.one()] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gens) {
          Elem const next = m.mul(g, queue[i]);
          if (!mask[next]) {
            mask[next] = true;
            queue.push_back(next);
          }
        }
      }
      return mask;
    }

    bool generates(FiniteMonoid const& m, std::vector<Elem> const& gens) {
      auto mask = generated(m, gens);
      for (Elem a = 1; a < m.size(); ++a) {
        if (!mask[a]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Elem> monoid_generators(FiniteMonoid const& m) {
    std::vector<Elem> candidates;
    for (Elem a = 1; a < m.size(); ++a) {
      if (a != m.one() && is_unit(m, a)) {
        candidates.push_back(a);
      }
    }
    for (Elem a = 1; a < m.size(); ++a) {
      if (!is_unit(m, a)) {
        candidates.push_back(a);
      }
    }
    std::vector<Elem> gens;
    for (auto c : candidates) {
      if (!generated(m, gens)[c]) {
        gens.push_back(c);
      }
    }
    for (std::size_t i = gens.size(); i-- > 0;) {
      auto trial = gens;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (generates(m, trial)) {
        gens = std::move(trial);
      }
    }
    return gens;
  }

}  // namespace kprime
