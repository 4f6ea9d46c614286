#include "kprime/aset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "kprime/canonical.hpp"
#include "kprime/errors.hpp"
#include "union_find.hpp"

namespace kprime {

  namespace {

    std::string str(std::size_t v) {
      return std::to_string(v);
    }

    void require_same_monoid(FiniteASet const& x, FiniteASet const& y, char const* what) {
      if (x.monoid() != y.monoid() && !x.monoid()->same_table(*y.monoid())) {
        throw InvalidAction(std::string(what) + ": A-sets over different monoids");
      }
    }

    // Closes `uf` to an A-congruence on x and returns the quotient: the class
    // of the base point becomes the base, other classes follow their least
    // member.
    QuotientASet quotient_by_congruence(FiniteASet const& x, detail::UnionFind& uf,
                                        std::string name) {
      auto const&       a = *x.monoid();
      std::size_t const m = x.size();
      bool              changed = true;
      while (changed) {
        changed = false;
        for (Elem p = 0; p < m; ++p) {
          auto const r = static_cast<Elem>(uf.find(p));
          if (r == p) {
            continue;
          }
          for (Elem c = 0; c < a.size(); ++c) {
            changed |= uf.unite(x.act(c, p), x.act(c, r));
          }
        }
      }
      std::vector<Elem> proj(m);
      std::vector<Elem> rep;
      std::map<std::size_t, Elem> renumber;
      for (Elem p = 0; p < m; ++p) {
        auto const root = uf.find(p);
        auto       it   = renumber.find(root);
        if (it == renumber.end()) {
          it = renumber.emplace(root, static_cast<Elem>(rep.size())).first;
          rep.push_back(p);
        }
        proj[p] = it->second;
      }
      std::size_t const k = rep.size();
      std::vector<Elem> act(a.size() * k);
      for (Elem c = 0; c < a.size(); ++c) {
        for (Elem q = 0; q < k; ++q) {
          act[c * k + q] = proj[x.act(c, rep[q])];
        }
      }
      auto set = FiniteASet::from_table(x.monoid(), std::move(name), k, std::move(act));
      return QuotientASet{set, ASetMap{x, set, std::move(proj)}};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteASet and ASubset
  ////////////////////////////////////////////////////////////////////////

  FiniteASet FiniteASet::from_table(MonoidPtr monoid, std::string name, std::size_t m,
                                    std::vector<Elem> act) {
    if (!monoid) {
      throw InvalidAction("A-set without a monoid");
    }
    auto const& a = *monoid;
    if (m == 0) {
      throw MalformedTable("a pointed set needs a base point");
    }
    if (act.size() != a.size() * m) {
      throw MalformedTable("action table has " + str(act.size()) + " entries, expected "
                           + str(a.size() * m));
    }
    for (auto v : act) {
      if (v >= m) {
        throw MalformedTable("action table entry " + str(v) + " out of range");
      }
    }
    auto at = [&](Elem c, Elem x) { return act[c * m + x]; };
    for (Elem x = 0; x < m; ++x) {
      if (at(a.one(), x) != x) {
        throw InvalidAction("1 does not act as the identity on point " + str(x));
      }
      if (at(a.star(), x) != kBase) {
        throw InvalidAction("* does not send point " + str(x) + " to the base point");
      }
    }
    for (Elem c = 0; c < a.size(); ++c) {
      if (at(c, kBase) != kBase) {
        throw InvalidAction("element " + str(c) + " moves the base point");
      }
    }
    for (Elem c = 0; c < a.size(); ++c) {
      for (Elem d = 0; d < a.size(); ++d) {
        for (Elem x = 0; x < m; ++x) {
          if (at(a.mul(c, d), x) != at(c, at(d, x))) {
            throw InvalidAction("(" + str(c) + "*" + str(d) + ")x != " + str(c) + "(" + str(d)
                                + "x) at point " + str(x));
          }
        }
      }
    }
    return FiniteASet(std::move(monoid), std::move(name), m, std::move(act));
  }

  FiniteASet FiniteASet::from_rows(MonoidPtr monoid, std::string name,
                                   std::vector<std::vector<Elem>> const& rows) {
    if (!monoid) {
      throw InvalidAction("A-set without a monoid");
    }
    if (rows.size() != monoid->size() || rows.empty()) {
      throw MalformedTable("action table needs one row per monoid element");
    }
    std::size_t const m = rows.front().size();
    std::vector<Elem> act;
    act.reserve(rows.size() * m);
    for (auto const& row : rows) {
      if (row.size() != m) {
        throw MalformedTable("action table rows have different lengths");
      }
      act.insert(act.end(), row.begin(), row.end());
    }
    return from_table(std::move(monoid), std::move(name), m, std::move(act));
  }

  FiniteASet FiniteASet::renamed(std::string name) const {
    FiniteASet copy = *this;
    copy._name      = std::move(name);
    return copy;
  }

  ASubset ASubset::make(FiniteASet const& parent, std::vector<Elem> const& members) {
    std::vector<bool> mask(parent.size(), false);
    for (auto x : members) {
      if (x >= parent.size()) {
        throw NotClosed("subset member " + str(x) + " out of range");
      }
      mask[x] = true;
    }
    return from_mask(parent, std::move(mask));
  }

  ASubset ASubset::from_mask(FiniteASet const& parent, std::vector<bool> mask) {
    if (mask.size() != parent.size()) {
      throw NotClosed("subset mask has the wrong length");
    }
    if (!mask[kBase]) {
      throw NotClosed("subset does not contain the base point");
    }
    for (Elem x = 0; x < parent.size(); ++x) {
      if (!mask[x]) {
        continue;
      }
      for (Elem c = 0; c < parent.monoid()->size(); ++c) {
        if (!mask[parent.act(c, x)]) {
          throw NotClosed("subset not closed: " + str(c) + " sends " + str(x) + " outside");
        }
      }
    }
    return ASubset(std::move(mask));
  }

  std::vector<Elem> ASubset::members() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _mask.size(); ++x) {
      if (_mask[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::size_t ASubset::size() const {
    return static_cast<std::size_t>(std::count(_mask.begin(), _mask.end(), true));
  }

  bool ASubset::is_subset_of(ASubset const& other) const {
    for (std::size_t x = 0; x < _mask.size(); ++x) {
      if (_mask[x] && !other._mask[x]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  ASetMap make_aset_map(FiniteASet source, FiniteASet target, std::vector<Elem> map) {
    require_same_monoid(source, target, "A-set map");
    if (map.size() != source.size()) {
      throw InvalidAction("map has " + str(map.size()) + " entries, expected "
                          + str(source.size()));
    }
    for (auto y : map) {
      if (y >= target.size()) {
        throw InvalidAction("map value " + str(y) + " out of range");
      }
    }
    if (map[kBase] != kBase) {
      throw InvalidAction("map does not preserve the base point");
    }
    for (Elem c = 0; c < source.monoid()->size(); ++c) {
      for (Elem x = 0; x < source.size(); ++x) {
        if (map[source.act(c, x)] != target.act(c, map[x])) {
          throw InvalidAction("map is not equivariant at element " + str(c) + ", point "
                              + str(x));
        }
      }
    }
    return ASetMap{std::move(source), std::move(target), std::move(map)};
  }

  ASetMap identity_map(FiniteASet const& x) {
    std::vector<Elem> map(x.size());
    for (Elem p = 0; p < x.size(); ++p) {
      map[p] = p;
    }
    return ASetMap{x, x, std::move(map)};
  }

  ASetMap compose(ASetMap const& g, ASetMap const& f) {
    if (f.target.size() != g.source.size() || f.target.table() != g.source.table()) {
      throw InvalidAction("maps are not composable");
    }
    std::vector<Elem> map(f.source.size());
    for (Elem p = 0; p < map.size(); ++p) {
      map[p] = g(f(p));
    }
    return ASetMap{f.source, g.target, std::move(map)};
  }

  bool is_injective(ASetMap const& f) {
    std::vector<bool> hit(f.target.size(), false);
    for (auto y : f.map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_surjective(ASetMap const& f) {
    std::vector<bool> hit(f.target.size(), false);
    for (auto y : f.map) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_bijective(ASetMap const& f) {
    return f.source.size() == f.target.size() && is_injective(f);
  }

  bool is_admissible_monic(ASetMap const& f) {
    return is_injective(f);
  }

  bool is_admissible_epi(ASetMap const& f) {
    if (!is_surjective(f)) {
      return false;
    }
    std::vector<bool> hit(f.target.size(), false);
    for (auto y : f.map) {
      if (y != kBase && hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_admissible_sequence(ASetMap const& i, ASetMap const& j) {
    if (i.target.table() != j.source.table() || i.target.size() != j.source.size()) {
      return false;
    }
    return is_admissible_monic(i) && is_admissible_epi(j) && image(i) == kernel(j);
  }

  ASubset kernel(ASetMap const& f) {
    std::vector<bool> mask(f.source.size(), false);
    for (Elem x = 0; x < f.source.size(); ++x) {
      mask[x] = f(x) == kBase;
    }
    return ASubset::from_mask(f.source, std::move(mask));
  }

  ASubset image(ASetMap const& f) {
    std::vector<bool> mask(f.target.size(), false);
    for (auto y : f.map) {
      mask[y] = true;
    }
    return ASubset::from_mask(f.target, std::move(mask));
  }

  ASubset preimage(ASetMap const& f, ASubset const& y) {
    std::vector<bool> mask(f.source.size(), false);
    for (Elem x = 0; x < f.source.size(); ++x) {
      mask[x] = y.contains(f(x));
    }
    return ASubset::from_mask(f.source, std::move(mask));
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic objects
  ////////////////////////////////////////////////////////////////////////

  FiniteASet point_aset(MonoidPtr const& monoid) {
    return FiniteASet::from_table(monoid, "pt", 1, std::vector<Elem>(monoid->size(), 0));
  }

  FiniteASet regular_aset(MonoidPtr const& monoid) {
    auto r = free_aset(monoid, 1);
    return r.renamed(monoid->name());
  }

  FiniteASet free_aset(MonoidPtr const& monoid, std::size_t k) {
    auto const&       a = *monoid;
    // Copy i of A \ * occupies points 1 + i(n-1) .. (i+1)(n-1); point
    // 1 + i(n-1) + (c-1) is c in copy i.
    std::size_t const n = a.size();
    std::size_t const m = 1 + k * (n - 1);
    std::vector<Elem> act(n * m, 0);
    for (Elem c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < k; ++i) {
        for (Elem d = 1; d < n; ++d) {
          Elem const prod = a.mul(c, d);
          act[c * m + 1 + i * (n - 1) + (d - 1)] =
              prod == a.star() ? kBase : static_cast<Elem>(1 + i * (n - 1) + (prod - 1));
        }
      }
    }
    return FiniteASet::from_table(monoid, "free" + str(k), m, std::move(act));
  }

  FiniteASet relabel(FiniteASet const& x, std::vector<Elem> const& perm) {
    std::size_t const m = x.size();
    if (perm.size() != m || perm[kBase] != kBase) {
      throw InvalidAction("relabelling must be a permutation fixing the base point");
    }
    std::vector<bool> seen(m, false);
    for (auto p : perm) {
      if (p >= m || seen[p]) {
        throw InvalidAction("relabelling is not a permutation");
      }
      seen[p] = true;
    }
    std::size_t const n = x.monoid()->size();
    std::vector<Elem> act(n * m);
    for (Elem c = 0; c < n; ++c) {
      for (Elem p = 0; p < m; ++p) {
        act[c * m + perm[p]] = perm[x.act(c, p)];
      }
    }
    return FiniteASet::from_table(x.monoid(), x.name(), m, std::move(act));
  }

  Wedge wedge(FiniteASet const& x, FiniteASet const& w) {
    require_same_monoid(x, w, "wedge");
    std::size_t const n  = x.monoid()->size();
    std::size_t const mx = x.size();
    std::size_t const m  = x.size() + w.size() - 1;
    // W's point q > 0 sits at mx + q - 1.
    auto              wpos = [&](Elem q) { return q == kBase ? kBase : static_cast<Elem>(mx + q - 1); };
    std::vector<Elem> act(n * m);
    for (Elem c = 0; c < n; ++c) {
      for (Elem p = 0; p < mx; ++p) {
        act[c * m + p] = x.act(c, p);
      }
      for (Elem q = 1; q < w.size(); ++q) {
        act[c * m + wpos(q)] = wpos(w.act(c, q));
      }
    }
    auto              set = FiniteASet::from_table(x.monoid(), x.name() + "v" + w.name(), m,
                                                   std::move(act));
    std::vector<Elem> left(mx), right(w.size()), cl(m, kBase), cr(m, kBase);
    for (Elem p = 0; p < mx; ++p) {
      left[p] = p;
      cr[p]   = p;
    }
    for (Elem q = 0; q < w.size(); ++q) {
      right[q]     = wpos(q);
      cl[wpos(q)]  = q;
    }
    return Wedge{set, ASetMap{x, set, std::move(left)}, ASetMap{w, set, std::move(right)},
                 ASetMap{set, w, std::move(cl)}, ASetMap{set, x, std::move(cr)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties
  ////////////////////////////////////////////////////////////////////////

  Decision is_pc_aset(FiniteASet const& x) {
    std::size_t const n = x.monoid()->size();
    for (Elem p = 1; p < x.size(); ++p) {
      for (Elem a = 0; a < n; ++a) {
        Elem const ap = x.act(a, p);
        if (ap == kBase) {
          continue;
        }
        for (Elem b = 0; b < a; ++b) {
          if (x.act(b, p) == ap) {
            return Decision{false, std::array<Elem, 3>{a, b, p}};
          }
        }
      }
    }
    return Decision{};
  }

  bool is_free(FiniteASet const& x) {
    std::size_t const n = x.monoid()->size();
    if (x.rank() == 0) {
      return true;
    }
    if (n == 1 || x.rank() % (n - 1) != 0) {
      return false;
    }
    return iso_test(x, free_aset(x.monoid(), x.rank() / (n - 1))).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subobjects and quotients
  ////////////////////////////////////////////////////////////////////////

  SubASet restrict_to(FiniteASet const& x, ASubset const& y) {
    auto const        members = y.members();
    std::vector<Elem> index(x.size(), 0);
    for (Elem i = 0; i < members.size(); ++i) {
      index[members[i]] = i;
    }
    std::size_t const n = x.monoid()->size();
    std::size_t const k = members.size();
    std::vector<Elem> act(n * k);
    for (Elem c = 0; c < n; ++c) {
      for (Elem i = 0; i < k; ++i) {
        act[c * k + i] = index[x.act(c, members[i])];
      }
    }
    auto set = FiniteASet::from_table(x.monoid(), x.name() + "|sub", k, std::move(act));
    return SubASet{set, ASetMap{set, x, members}};
  }

  QuotientASet quotient_aset(FiniteASet const& x, ASubset const& y) {
    std::vector<Elem> proj(x.size(), kBase);
    std::vector<Elem> rep{kBase};
    for (Elem p = 1; p < x.size(); ++p) {
      if (!y.contains(p)) {
        proj[p] = static_cast<Elem>(rep.size());
        rep.push_back(p);
      }
    }
    std::size_t const n = x.monoid()->size();
    std::size_t const k = rep.size();
    std::vector<Elem> act(n * k);
    for (Elem c = 0; c < n; ++c) {
      for (Elem i = 0; i < k; ++i) {
        act[c * k + i] = proj[x.act(c, rep[i])];
      }
    }
    auto set = FiniteASet::from_table(x.monoid(), x.name() + "/Y", k, std::move(act));
    return QuotientASet{set, ASetMap{x, set, std::move(proj)}};
  }

  QuotientASet quotient_by_pairs(FiniteASet const& x,
                                 std::vector<std::pair<Elem, Elem>> const& pairs) {
    detail::UnionFind uf(x.size());
    for (auto const& [p, q] : pairs) {
      if (p >= x.size() || q >= x.size()) {
        throw InvalidAction("identified point out of range");
      }
      uf.unite(p, q);
    }
    return quotient_by_congruence(x, uf, x.name() + "/~");
  }

  ASubset subset_union(ASubset const& y, ASubset const& z) {
    std::vector<bool> mask = y.mask();
    for (std::size_t p = 0; p < mask.size(); ++p) {
      mask[p] = mask[p] || z.contains(static_cast<Elem>(p));
    }
    return ASubset::from_mask_unchecked(std::move(mask));
  }

  ASubset subset_intersection(ASubset const& y, ASubset const& z) {
    std::vector<bool> mask = y.mask();
    for (std::size_t p = 0; p < mask.size(); ++p) {
      mask[p] = mask[p] && z.contains(static_cast<Elem>(p));
    }
    return ASubset::from_mask_unchecked(std::move(mask));
  }

  std::pair<ASubset, ASubset> lattice_ops(ASubset const& y, ASubset const& z) {
    return {subset_union(y, z), subset_intersection(y, z)};
  }

  ASubset generated_subset(FiniteASet const& x, std::span<Elem const> seeds) {
    std::vector<bool> mask(x.size(), false);
    mask[kBase] = true;
    for (auto s : seeds) {
      if (s >= x.size()) {
        throw NotClosed("seed " + str(s) + " out of range");
      }
      // The orbit A.s is already closed.
      for (Elem c = 0; c < x.monoid()->size(); ++c) {
        mask[x.act(c, s)] = true;
      }
    }
    return ASubset::from_mask_unchecked(std::move(mask));
  }

  std::vector<ASubset> all_subsets(FiniteASet const& x) {
    // Every A-subset is a union of orbits A.p, so a closure under adding
    // orbits reaches all of them.
    std::vector<std::vector<bool>> orbits;
    for (Elem p = 0; p < x.size(); ++p) {
      Elem const seed[] = {p};
      orbits.push_back(generated_subset(x, seed).mask());
    }
    std::set<std::vector<bool>>    seen{orbits[kBase]};
    std::vector<std::vector<bool>> frontier{orbits[kBase]};
    while (!frontier.empty()) {
      std::vector<std::vector<bool>> next;
      for (auto const& s : frontier) {
        for (Elem p = 1; p < x.size(); ++p) {
          if (s[p]) {
            continue;
          }
          auto t = s;
          for (std::size_t q = 0; q < t.size(); ++q) {
            t[q] = t[q] || orbits[p][q];
          }
          if (seen.insert(t).second) {
            next.push_back(std::move(t));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ASubset> out;
    out.reserve(seen.size());
    for (auto const& s : seen) {
      out.push_back(ASubset::from_mask_unchecked(s));
    }
    std::sort(out.begin(), out.end(), [](ASubset const& a, ASubset const& b) {
      auto const sa = a.size(), sb = b.size();
      return sa != sb ? sa < sb : a.members() < b.members();
    });
    return out;
  }

  ASubset ideal_times(FiniteASet const& x, Ideal const& ideal) {
    if (ideal.parent_size() != x.monoid()->size()) {
      throw NotClosed("ideal belongs to a different monoid");
    }
    std::vector<bool> mask(x.size(), false);
    for (auto c : ideal.members()) {
      for (Elem p = 0; p < x.size(); ++p) {
        mask[x.act(c, p)] = true;
      }
    }
    return ASubset::from_mask(x, std::move(mask));
  }

  ASetMap noether_witness(FiniteASet const& x, ASubset const& y, ASubset const& z) {
    auto const [yz_union, yz_meet] = lattice_ops(y, z);
    // Left side: Y / (Y n Z).
    auto const ysub  = restrict_to(x, y);
    auto const lmeet = preimage(ysub.inclusion, yz_meet);
    auto const left  = quotient_aset(ysub.set, lmeet);
    // Right side: (Y u Z) / Z.
    auto const usub   = restrict_to(x, yz_union);
    auto const rz     = preimage(usub.inclusion, z);
    auto const right  = quotient_aset(usub.set, rz);
    // A point of the left side is a point of Y \ Z; send it to the same point
    // of X viewed in (Y u Z) \ Z.
    std::vector<Elem> to_right(x.size(), kBase);
    for (Elem i = 0; i < usub.set.size(); ++i) {
      to_right[usub.inclusion(i)] = right.projection(i);
    }
    std::vector<Elem> map(left.set.size(), kBase);
    for (Elem i = 0; i < ysub.set.size(); ++i) {
      map[left.projection(i)] = to_right[ysub.inclusion(i)];
    }
    auto f = make_aset_map(left.set, right.set, std::move(map));
    if (!is_bijective(f)) {
      throw Error("second isomorphism map is not a bijection");
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pushouts, pullbacks, change of monoid
  ////////////////////////////////////////////////////////////////////////

  Pushout pushout_of(ASetMap const& f, ASetMap const& g) {
    if (f.source.table() != g.source.table() || f.source.size() != g.source.size()) {
      throw InvalidAction("pushout needs maps with a common source");
    }
    auto              w = wedge(f.target, g.target);
    detail::UnionFind uf(w.set.size());
    for (Elem y = 0; y < f.source.size(); ++y) {
      uf.unite(w.left(f(y)), w.right(g(y)));
    }
    auto q = quotient_by_congruence(w.set, uf, f.target.name() + "u" + g.target.name());
    return Pushout{q.set, compose(q.projection, w.left), compose(q.projection, w.right)};
  }

  Pushout pushout(ASetMap const& f, ASetMap const& g) {
    if (!is_admissible_monic(f) || !is_admissible_monic(g)) {
      throw NotMonic("pushout along a map that is not injective");
    }
    return pushout_of(f, g);
  }

  Pullback fiber_product(ASetMap const& f, ASetMap const& g) {
    if (f.target.table() != g.target.table() || f.target.size() != g.target.size()) {
      throw InvalidAction("pullback needs maps with a common target");
    }
    std::vector<std::pair<Elem, Elem>> pts{{kBase, kBase}};
    for (Elem x = 0; x < f.source.size(); ++x) {
      for (Elem w = 0; w < g.source.size(); ++w) {
        if ((x != kBase || w != kBase) && f(x) == g(w)) {
          pts.emplace_back(x, w);
        }
      }
    }
    std::map<std::pair<Elem, Elem>, Elem> index;
    for (Elem i = 0; i < pts.size(); ++i) {
      index[pts[i]] = i;
    }
    std::size_t const n = f.source.monoid()->size();
    std::size_t const k = pts.size();
    std::vector<Elem> act(n * k);
    std::vector<Elem> to_left(k), to_right(k);
    for (Elem i = 0; i < k; ++i) {
      auto const [x, w] = pts[i];
      to_left[i]        = x;
      to_right[i]       = w;
      for (Elem c = 0; c < n; ++c) {
        act[c * k + i] = index.at({f.source.act(c, x), g.source.act(c, w)});
      }
    }
    auto set = FiniteASet::from_table(f.source.monoid(),
                                      f.source.name() + "x" + g.source.name(), k, std::move(act));
    return Pullback{set, ASetMap{set, f.source, std::move(to_left)},
                    ASetMap{set, g.source, std::move(to_right)}};
  }

  Pullback pullback(ASetMap const& p, ASetMap const& q) {
    if (!is_admissible_epi(p) || !is_admissible_epi(q)) {
      throw NotEpi("pullback along a map that is not an admissible epi");
    }
    return fiber_product(p, q);
  }

  FiniteASet base_change(MonoidMap const& f, FiniteASet const& x) {
    auto const& a = *f.source;
    auto const& b = *f.target;
    if (x.monoid() != f.source && !x.monoid()->same_table(a)) {
      throw InvalidAction("base change: A-set is not over the source monoid");
    }
    // Point (c, p) for c in B \ *, p in X \ base sits at 1 + (c-1)(|X|-1) + (p-1).
    std::size_t const mx  = x.size();
    std::size_t const m   = 1 + (b.size() - 1) * (mx - 1);
    auto              pos = [&](Elem c, Elem p) -> Elem {
      if (c == b.star() || p == kBase || b.size() == 1) {
        return kBase;
      }
      return static_cast<Elem>(1 + (c - 1) * (mx - 1) + (p - 1));
    };
    std::vector<Elem> act(b.size() * m, kBase);
    for (Elem d = 0; d < b.size(); ++d) {
      for (Elem c = 1; c < b.size(); ++c) {
        for (Elem p = 1; p < mx; ++p) {
          act[d * m + pos(c, p)] = pos(b.mul(d, c), p);
        }
      }
    }
    auto              smash = FiniteASet::from_table(f.target, "pre", m, std::move(act));
    detail::UnionFind uf(m);
    for (Elem c = 1; c < b.size(); ++c) {
      for (Elem e = 0; e < a.size(); ++e) {
        for (Elem p = 1; p < mx; ++p) {
          uf.unite(pos(b.mul(c, f(e)), p), pos(c, x.act(e, p)));
        }
      }
    }
    return quotient_by_congruence(smash, uf, b.name() + "^" + x.name()).set;
  }

  FiniteASet restrict_scalars(MonoidMap const& f, FiniteASet const& y) {
    if (y.monoid() != f.target && !y.monoid()->same_table(*f.target)) {
      throw InvalidAction("restriction: A-set is not over the target monoid");
    }
    std::size_t const n = f.source->size();
    std::size_t const m = y.size();
    std::vector<Elem> act(n * m);
    for (Elem c = 0; c < n; ++c) {
      for (Elem p = 0; p < m; ++p) {
        act[c * m + p] = y.act(f(c), p);
      }
    }
    return FiniteASet::from_table(f.source, y.name(), m, std::move(act));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  CanonicalASet canonical_form(FiniteASet const& x) {
    // Refine along a generating set only; the full table is then relabelled
    // with the winning labelling. Automorphisms of the generator action are
    // automorphisms of the whole action, so the result is still invariant.
    auto const        gens = monoid_generators(*x.monoid());
    std::size_t const m    = x.size();
    std::vector<Elem> maps;
    maps.reserve(gens.size() * m);
    for (auto g : gens) {
      for (Elem p = 0; p < m; ++p) {
        maps.push_back(x.act(g, p));
      }
    }
    auto              lab = canonical_labeling(m, gens.size(), maps);
    std::size_t const n   = x.monoid()->size();
    CanonicalASet     out;
    out.table.assign(n * m, 0);
    for (Elem c = 0; c < n; ++c) {
      for (Elem p = 0; p < m; ++p) {
        out.table[c * m + lab.relabel[p]] = lab.relabel[x.act(c, p)];
      }
    }
    out.relabel = std::move(lab.relabel);
    return out;
  }

  std::string canonical_key(FiniteASet const& x) {
    auto const  form = canonical_form(x);
    std::string key  = str(x.size()) + ":";
    for (auto v : form.table) {
      key += static_cast<char>('0' + (v % 64));
      if (v >= 64) {
        key += '[' + str(v) + ']';
      }
    }
    return key;
  }

  std::optional<std::vector<Elem>> iso_test(FiniteASet const& x, FiniteASet const& y) {
    if (x.size() != y.size() || !x.monoid()->same_table(*y.monoid())) {
      return std::nullopt;
    }
    auto const cx = canonical_form(x);
    auto const cy = canonical_form(y);
    if (cx.table != cy.table) {
      return std::nullopt;
    }
    std::vector<Elem> inv_y(y.size());
    for (Elem p = 0; p < y.size(); ++p) {
      inv_y[cy.relabel[p]] = p;
    }
    std::vector<Elem> iso(x.size());
    for (Elem p = 0; p < x.size(); ++p) {
      iso[p] = inv_y[cx.relabel[p]];
    }
    return iso;
  }

  char const* to_string(ASetFlavor f) {
    switch (f) {
      case ASetFlavor::all:
        return "all";
      case ASetFlavor::pc:
        return "pc";
      case ASetFlavor::free:
        return "free";
    }
    return "?";
  }

}  // namespace kprime
