#include "kprime/nset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kprime/builders.hpp"
#include "kprime/canonical.hpp"
#include "kprime/errors.hpp"

namespace kprime {

  namespace {

    std::string str(std::size_t v) {
      return std::to_string(v);
    }

    // Odometer over all self-maps of {0..k} fixing 0, with values drawn from
    // `values`.
    template <typename Fn>
    void for_each_map(std::size_t k, std::vector<Elem> const& values, Fn fn) {
      std::vector<Elem>        succ(k + 1, 0);
      std::vector<std::size_t> digit(k + 1, 0);
      for (std::size_t x = 1; x <= k; ++x) {
        succ[x] = values[0];
      }
      while (true) {
        fn(succ);
        std::size_t x = 1;
        while (x <= k && ++digit[x] == values.size()) {
          digit[x] = 0;
          succ[x]  = values[0];
          ++x;
        }
        if (x > k) {
          return;
        }
        succ[x] = values[digit[x]];
      }
    }

    std::vector<Elem> range_values(std::size_t k, bool tails) {
      std::vector<Elem> v(k + 1);
      std::iota(v.begin(), v.end(), Elem{0});
      if (tails) {
        v.push_back(kTail);
      }
      return v;
    }

    // Canonical successor table of a core whose tail-roots point at kTail;
    // tails are encoded as edges into an extra, differently coloured point.
    std::pair<std::vector<Elem>, std::vector<Elem>> canonical_core(std::vector<Elem> const& succ) {
      std::size_t const          m     = succ.size();
      Elem const                 omega = static_cast<Elem>(m);
      std::vector<Elem>          maps(m + 1);
      std::vector<std::uint32_t> colors(m + 1, 0);
      for (std::size_t x = 0; x < m; ++x) {
        maps[x] = succ[x] == kTail ? omega : succ[x];
      }
      maps[m]   = omega;
      colors[m] = 1;
      auto lab  = canonical_labeling(m + 1, 1, maps, colors);
      // The extra point has the largest initial colour, so it keeps label m.
      std::vector<Elem> out(m);
      for (std::size_t x = 0; x < m; ++x) {
        Elem const s = lab.maps[x];
        out[x]       = s == omega ? kTail : s;
      }
      lab.relabel.pop_back();
      return {std::move(out), std::move(lab.relabel)};
    }

    // Absorb tail-roots with a single predecessor; returns the reduced table
    // and old point -> new point (kTail for absorbed points).
    std::pair<std::vector<Elem>, std::vector<Elem>> reduce(std::vector<Elem> succ) {
      std::vector<Elem> where(succ.size());
      std::iota(where.begin(), where.end(), Elem{0});
      while (true) {
        std::vector<std::size_t> indeg(succ.size(), 0);
        std::vector<Elem>        pred(succ.size(), kTail);
        for (Elem x = 0; x < succ.size(); ++x) {
          if (succ[x] != kTail) {
            ++indeg[succ[x]];
            pred[succ[x]] = x;
          }
        }
        Elem victim = kTail;
        for (Elem v = 1; v < succ.size() && victim == kTail; ++v) {
          if (succ[v] == kTail && indeg[v] == 1) {
            victim = v;
          }
        }
        if (victim == kTail) {
          return {std::move(succ), std::move(where)};
        }
        succ[pred[victim]] = kTail;
        std::vector<Elem> shift(succ.size());
        std::vector<Elem> next;
        for (Elem x = 0; x < succ.size(); ++x) {
          shift[x] = x == victim ? kTail : static_cast<Elem>(x < victim ? x : x - 1);
        }
        for (Elem x = 0; x < succ.size(); ++x) {
          if (x != victim) {
            next.push_back(succ[x] == kTail ? kTail : shift[succ[x]]);
          }
        }
        for (auto& w : where) {
          w = w == kTail ? kTail : shift[w];
        }
        succ = std::move(next);
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Finite N-sets
  ////////////////////////////////////////////////////////////////////////

  FunctionalNSet FunctionalNSet::make(std::string name, std::vector<Elem> succ) {
    if (succ.empty()) {
      throw MalformedTable("an N-set needs a base point");
    }
    if (succ[kBase] != kBase) {
      throw MalformedTable("successor does not fix the base point");
    }
    for (auto s : succ) {
      if (s >= succ.size()) {
        throw MalformedTable("successor value " + str(s) + " out of range");
      }
    }
    return FunctionalNSet(std::move(name), std::move(succ));
  }

  FunctionalNSet path_nset(std::size_t k) {
    std::vector<Elem> succ(k + 1, 0);
    for (Elem x = 2; x <= k; ++x) {
      succ[x] = x - 1;
    }
    return FunctionalNSet::make("P" + str(k), std::move(succ));
  }

  FunctionalNSet loop_nset(std::size_t d) {
    std::vector<Elem> succ(d + 1, 0);
    for (Elem x = 1; x <= d; ++x) {
      succ[x] = x == d ? 1 : x + 1;
    }
    return FunctionalNSet::make("L" + str(d), std::move(succ));
  }

  NSetClass classify_nset(FunctionalNSet const& x) {
    // 0 unvisited, 1 on the current walk, 2 finished.
    std::vector<int>  state(x.size(), 0);
    NSetClass         out;
    state[kBase] = 2;
    for (Elem start = 1; start < x.size(); ++start) {
      std::vector<Elem> walk;
      Elem              p = start;
      while (state[p] == 0) {
        state[p] = 1;
        walk.push_back(p);
        p = x.succ(p);
      }
      if (state[p] == 1) {
        auto const at = std::find(walk.begin(), walk.end(), p);
        out.loop_lengths.push_back(static_cast<std::size_t>(walk.end() - at));
      }
      for (auto w : walk) {
        state[w] = 2;
      }
    }
    std::sort(out.loop_lengths.begin(), out.loop_lengths.end());
    out.rooted_tree = out.loop_lengths.empty();
    return out;
  }

  FiniteASet to_truncated_aset(FunctionalNSet const& x) {
    std::size_t const m = x.size();
    // Points on cycles (base included), then steps to reach one.
    std::vector<bool> cyclic(m, false);
    for (Elem p = 0; p < m; ++p) {
      Elem q = p;
      for (std::size_t i = 0; i < m; ++i) {
        q = x.succ(q);
      }
      // After m steps q is on a cycle; mark the whole cycle.
      Elem r = q;
      do {
        cyclic[r] = true;
        r         = x.succ(r);
      } while (r != q);
    }
    std::size_t depth = 0;
    for (Elem p = 0; p < m; ++p) {
      std::size_t steps = 0;
      for (Elem q = p; !cyclic[q]; q = x.succ(q)) {
        ++steps;
      }
      depth = std::max(depth, steps);
    }
    auto const   cls = classify_nset(x);
    FiniteMonoid mon = [&] {
      if (cls.rooted_tree) {
        return make_truncated_polynomial(std::max<std::size_t>(depth, 1));
      }
      std::size_t l = 1;
      for (auto d : cls.loop_lengths) {
        l = std::lcm(l, d);
      }
      return make_cyclic_monoid(std::max<std::size_t>(depth, 1), l);
    }();
    std::size_t const n = mon.size();
    std::vector<Elem> act(n * m, kBase);
    for (Elem p = 0; p < m; ++p) {
      Elem q = p;
      // Index i + 1 is t^i in both families.
      for (Elem c = 1; c < n; ++c) {
        act[c * m + p] = q;
        q              = x.succ(q);
      }
    }
    return FiniteASet::from_table(share(std::move(mon)), x.name(), m, std::move(act));
  }

  std::string nset_key(FunctionalNSet const& x) {
    auto        lab = canonical_labeling(x.size(), 1, x.succ_map());
    std::string key;
    for (auto v : lab.maps) {
      key += str(v) + ",";
    }
    return key;
  }

  std::vector<FunctionalNSet> enumerate_nsets(std::size_t n) {
    std::vector<FunctionalNSet> out;
    for (std::size_t k = 0; k <= n; ++k) {
      std::map<std::vector<Elem>, bool> seen;
      for_each_map(k, range_values(k, false), [&](std::vector<Elem> const& succ) {
        auto lab = canonical_labeling(k + 1, 1, succ);
        seen.emplace(std::move(lab.maps), true);
      });
      std::size_t index = 0;
      for (auto const& [succ, unused] : seen) {
        out.push_back(FunctionalNSet::make("N" + str(k) + "." + str(index++), succ));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finitely generated N-sets
  ////////////////////////////////////////////////////////////////////////

  FgNSet FgNSet::make(std::string name, std::vector<Elem> succ) {
    if (succ.empty()) {
      throw MalformedTable("an N-set needs a base point");
    }
    if (succ[kBase] != kBase) {
      throw MalformedTable("successor does not fix the base point");
    }
    for (auto s : succ) {
      if (s != kTail && s >= succ.size()) {
        throw MalformedTable("successor value " + str(s) + " out of range");
      }
    }
    return FgNSet(std::move(name), std::move(succ));
  }

  FgNSet FgNSet::from_finite(FunctionalNSet const& x) {
    return FgNSet(x.name(), x.succ_map());
  }

  std::vector<Elem> FgNSet::roots() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _succ.size(); ++x) {
      if (_succ[x] == kTail) {
        out.push_back(x);
      }
    }
    return out;
  }

  FgNSet FgNSet::renamed(std::string name) const {
    FgNSet copy = *this;
    copy._name  = std::move(name);
    return copy;
  }

  FgNSet free_chain() {
    return FgNSet::make("N", {0, kTail});
  }

  FgNSet canonicalize(FgNSet const& x) {
    auto [reduced, where] = reduce(x.succ_map());
    auto [table, relabel] = canonical_core(reduced);
    return FgNSet::make(x.name(), std::move(table));
  }

  std::string fgn_key(FgNSet const& x) {
    auto const  c = canonicalize(x);
    std::string key;
    for (auto v : c.succ_map()) {
      key += v == kTail ? std::string("t,") : str(v) + ",";
    }
    return key;
  }

  std::optional<std::vector<Elem>> fgn_iso(FgNSet const& x, FgNSet const& y) {
    auto const [rx, wx] = reduce(x.succ_map());
    auto const [ry, wy] = reduce(y.succ_map());
    if (rx.size() != ry.size()) {
      return std::nullopt;
    }
    auto const [cx, lx] = canonical_core(rx);
    auto const [cy, ly] = canonical_core(ry);
    if (cx != cy) {
      return std::nullopt;
    }
    std::vector<Elem> inv_y(ly.size());
    for (Elem p = 0; p < ly.size(); ++p) {
      inv_y[ly[p]] = p;
    }
    std::vector<Elem> iso(lx.size());
    for (Elem p = 0; p < lx.size(); ++p) {
      iso[p] = inv_y[lx[p]];
    }
    return iso;
  }

  void check_closed(FgNSet const& x, FgnSubset const& y) {
    if (y.core.size() != x.size() || y.entry.size() != x.size()) {
      throw NotClosed("subset has the wrong length");
    }
    if (!y.core[kBase]) {
      throw NotClosed("subset does not contain the base point");
    }
    for (Elem p = 0; p < x.size(); ++p) {
      if (y.entry[p] != 0 && (!x.is_root(p) || y.core[p])) {
        throw NotClosed("entry offset on point " + str(p) + " which is not an outside tail-root");
      }
      if (y.core[p] && !x.is_root(p) && !y.core[x.succ(p)]) {
        throw NotClosed("subset not closed under succ at point " + str(p));
      }
    }
  }

  std::vector<FgnSubset> fgn_subsets(FgNSet const& x, std::size_t max_offset) {
    std::size_t const m = x.size();
    // Forward orbits inside the core.
    std::vector<std::vector<bool>> orbit(m, std::vector<bool>(m, false));
    for (Elem p = 0; p < m; ++p) {
      orbit[p][kBase] = true;
      for (Elem q = p; !orbit[p][q];) {
        orbit[p][q] = true;
        if (x.is_root(q)) {
          break;
        }
        q = x.succ(q);
      }
    }
    std::set<std::vector<bool>>    masks{orbit[kBase]};
    std::vector<std::vector<bool>> frontier{orbit[kBase]};
    while (!frontier.empty()) {
      std::vector<std::vector<bool>> next;
      for (auto const& s : frontier) {
        for (Elem p = 1; p < m; ++p) {
          if (s[p]) {
            continue;
          }
          auto t = s;
          for (Elem q = 0; q < m; ++q) {
            t[q] = t[q] || orbit[p][q];
          }
          if (masks.insert(t).second) {
            next.push_back(std::move(t));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<FgnSubset> out;
    for (auto const& mask : masks) {
      std::vector<Elem> open;
      for (Elem p = 0; p < m; ++p) {
        if (x.is_root(p) && !mask[p]) {
          open.push_back(p);
        }
      }
      std::vector<std::size_t> entry(m, 0);
      while (true) {
        out.push_back(FgnSubset{mask, entry});
        std::size_t i = 0;
        while (i < open.size() && ++entry[open[i]] > max_offset) {
          entry[open[i]] = 0;
          ++i;
        }
        if (i == open.size()) {
          break;
        }
      }
    }
    return out;
  }

  FgNSet fgn_quotient(FgNSet const& x, FgnSubset const& y) {
    check_closed(x, y);
    std::size_t const m = x.size();
    std::vector<Elem> index(m, kBase);
    std::vector<Elem> succ{kBase};
    for (Elem p = 1; p < m; ++p) {
      if (!y.core[p]) {
        index[p] = static_cast<Elem>(succ.size());
        succ.push_back(kBase);
      }
    }
    for (Elem p = 1; p < m; ++p) {
      if (y.core[p]) {
        continue;
      }
      if (!x.is_root(p)) {
        succ[index[p]] = index[x.succ(p)];
        continue;
      }
      std::size_t const k = y.entry[p];
      if (k == 0) {
        succ[index[p]] = kTail;
        continue;
      }
      // t v, ..., t^(k-1) v become core points; t^k v is collapsed.
      Elem prev = index[p];
      for (std::size_t i = 1; i < k; ++i) {
        auto const fresh = static_cast<Elem>(succ.size());
        succ.push_back(kBase);
        succ[prev] = fresh;
        prev       = fresh;
      }
      succ[prev] = kBase;
    }
    return canonicalize(FgNSet::make(x.name() + "/Y", std::move(succ)));
  }

  FgNSet fgn_subobject(FgNSet const& x, FgnSubset const& y) {
    check_closed(x, y);
    std::size_t const m = x.size();
    std::vector<Elem> index(m, kBase);
    std::vector<Elem> succ;
    for (Elem p = 0; p < m; ++p) {
      if (y.core[p]) {
        index[p] = static_cast<Elem>(succ.size());
        succ.push_back(kBase);
      }
    }
    for (Elem p = 0; p < m; ++p) {
      if (y.core[p]) {
        succ[index[p]] = x.is_root(p) ? kTail : index[x.succ(p)];
      } else if (y.entry[p] != 0) {
        succ.push_back(kTail);
      }
    }
    return canonicalize(FgNSet::make(x.name() + "|sub", std::move(succ)));
  }

  std::vector<FgNSet> enumerate_fgnsets(std::size_t core_bound, bool tails) {
    std::map<std::pair<std::size_t, std::vector<Elem>>, bool> seen;
    for (std::size_t k = 0; k <= core_bound; ++k) {
      for_each_map(k, range_values(k, tails), [&](std::vector<Elem> const& succ) {
        auto c = canonicalize(FgNSet::make("", succ));
        seen.emplace(std::pair{c.core_rank(), c.succ_map()}, true);
      });
    }
    std::vector<FgNSet> out;
    std::size_t         index = 0, rank = 0;
    for (auto const& [key, unused] : seen) {
      if (key.first != rank) {
        rank  = key.first;
        index = 0;
      }
      out.push_back(FgNSet::make("G" + str(rank) + "." + str(index++), key.second));
    }
    return out;
  }

  std::string to_dot(FgNSet const& x) {
    std::ostringstream os;
    os << "digraph \"" << x.name() << "\" {\n  0 [label=\"*\", shape=doublecircle];\n";
    for (Elem p = 1; p < x.size(); ++p) {
      os << "  " << p << ";\n";
    }
    for (Elem p = 1; p < x.size(); ++p) {
      if (x.is_root(p)) {
        os << "  tail" << p << " [label=\"...\", shape=plaintext];\n";
        os << "  " << p << " -> tail" << p << " [style=dashed];\n";
      } else {
        os << "  " << p << " -> " << x.succ(p) << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  std::string to_dot(FunctionalNSet const& x) {
    return to_dot(FgNSet::from_finite(x));
  }

}  // namespace kprime
