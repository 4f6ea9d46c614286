#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "kprime/aset.hpp"
#include "kprime/errors.hpp"

namespace kprime {

  namespace {

    constexpr Elem kUnset = ~Elem{0};

    // The monoid as words in a generating set: every element other than *
    // is reached from 1 in the left Cayley graph, and an action is determined
    // by the generator maps subject to act(g c) = g act(c) for every generator
    // g and every element c.
    struct Presentation {
      std::vector<Elem>              gens;
      std::vector<bool>              unit;   // per generator
      // words[c] lists generator positions, applied first to last.
      std::vector<std::vector<std::size_t>> words;
      // (g, c): act(gens[g] * c) must equal gens[g] applied to act(c).
      std::vector<std::pair<std::size_t, Elem>> relations;
    };

    Presentation present(FiniteMonoid const& a) {
      Presentation p;
      p.gens = monoid_generators(a);
      for (auto g : p.gens) {
        p.unit.push_back(is_unit(a, g));
      }
      std::size_t const n = a.size();
      p.words.assign(n, {});
      std::vector<bool> seen(n, false);
      std::vector<Elem> queue{a.one()};
      seen[a.one()]  = true;
      seen[a.star()] = true;
      std::vector<std::pair<std::size_t, Elem>> tree;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Elem const c = queue[head];
        for (std::size_t g = 0; g < p.gens.size(); ++g) {
          Elem const d = a.mul(p.gens[g], c);
          if (!seen[d]) {
            seen[d]    = true;
            p.words[d] = p.words[c];
            p.words[d].push_back(g);
            queue.push_back(d);
            tree.emplace_back(g, c);
          }
        }
      }
      for (Elem c = 0; c < n; ++c) {
        if (c == a.star() || !seen[c]) {
          continue;
        }
        for (std::size_t g = 0; g < p.gens.size(); ++g) {
          if (std::find(tree.begin(), tree.end(), std::pair{g, c}) == tree.end()) {
            p.relations.emplace_back(g, c);
          }
        }
      }
      return p;
    }

    class Enumerator {
     public:
      Enumerator(MonoidPtr monoid, std::size_t k)
          : _monoid(std::move(monoid)), _a(*_monoid), _p(present(_a)), _k(k), _m(k + 1),
            _f(_p.gens.size() * _m, kUnset) {
        for (std::size_t g = 0; g < _p.gens.size(); ++g) {
          _f[g * _m + kBase] = kBase;
        }
      }

      std::map<std::vector<Elem>, FiniteASet> run() {
        if (!_p.gens.empty() && _p.unit[0]) {
          // Up to relabelling the first unit generator acts by a fixed
          // permutation of each cycle type.
          partitions(_k, _k, {});
        } else {
          search(0);
        }
        return std::move(_found);
      }

     private:
      Elem eval(Elem c, Elem x) const {
        if (c == _a.star()) {
          return kBase;
        }
        for (auto g : _p.words[c]) {
          x = _f[g * _m + x];
          if (x == kUnset) {
            return kUnset;
          }
        }
        return x;
      }

      bool consistent() const {
        for (auto const& [g, c] : _p.relations) {
          Elem const gc = _a.mul(_p.gens[g], c);
          for (Elem x = 1; x < _m; ++x) {
            Elem const lhs = eval(gc, x);
            if (lhs == kUnset) {
              continue;
            }
            Elem const inner = eval(c, x);
            if (inner == kUnset) {
              continue;
            }
            Elem const rhs = _f[g * _m + inner];
            if (rhs != kUnset && rhs != lhs) {
              return false;
            }
          }
        }
        return true;
      }

      void partitions(std::size_t left, std::size_t max_part, std::vector<std::size_t> parts) {
        if (left == 0) {
          Elem start = 1;
          for (auto len : parts) {
            for (std::size_t i = 0; i < len; ++i) {
              _f[start + i] = static_cast<Elem>(start + (i + 1) % len);
            }
            start += static_cast<Elem>(len);
          }
          if (consistent()) {
            search(_m);  // generator 0 is filled in
          }
          return;
        }
        for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
          auto next = parts;
          next.push_back(part);
          partitions(left - part, part, std::move(next));
        }
      }

      // Slots are (generator, point) pairs in generator-major order; `slot`
      // indexes _f directly and prefilled slots are skipped.
      void search(std::size_t slot) {
        while (slot < _f.size() && _f[slot] != kUnset) {
          ++slot;
        }
        if (slot == _f.size()) {
          record();
          return;
        }
        std::size_t const g = slot / _m;
        for (Elem y = 0; y < _m; ++y) {
          if (_p.unit[g]) {
            if (y == kBase) {
              continue;
            }
            bool used = false;
            for (Elem x = 1; x < _m && !used; ++x) {
              used = _f[g * _m + x] == y;
            }
            if (used) {
              continue;
            }
          }
          _f[slot] = y;
          if (consistent()) {
            search(slot + 1);
          }
          _f[slot] = kUnset;
        }
      }

      void record() {
        std::size_t const n = _a.size();
        std::vector<Elem> act(n * _m);
        for (Elem c = 0; c < n; ++c) {
          for (Elem x = 0; x < _m; ++x) {
            act[c * _m + x] = eval(c, x);
          }
        }
        auto set  = FiniteASet::from_table(_monoid, "", _m, std::move(act));
        auto form = canonical_form(set);
        if (_found.count(form.table) == 0) {
          auto canon = FiniteASet::from_table(_monoid, "", _m, form.table);
          _found.emplace(std::move(form.table), std::move(canon));
        }
      }

      MonoidPtr                               _monoid;
      FiniteMonoid const&                     _a;
      Presentation                            _p;
      std::size_t                             _k;
      std::size_t                             _m;
      std::vector<Elem>                       _f;
      std::map<std::vector<Elem>, FiniteASet> _found;
    };

    std::string class_name(std::size_t rank, std::size_t index) {
      return "X" + std::to_string(rank) + "." + std::to_string(index);
    }

  }  // namespace

  std::vector<FiniteASet> enumerate_asets(MonoidPtr const& monoid, std::size_t n,
                                          ASetFlavor flavor) {
    std::vector<FiniteASet> out;
    std::size_t const       size = monoid->size();
    if (flavor == ASetFlavor::free || size == 1) {
      // Free A-sets are wedges of A; over the zero monoid only the point exists.
      out.push_back(point_aset(monoid).renamed(class_name(0, 0)));
      if (size > 1) {
        for (std::size_t k = 1; k * (size - 1) <= n; ++k) {
          auto free = free_aset(monoid, k);
          auto form = canonical_form(free);
          out.push_back(FiniteASet::from_table(monoid, class_name(free.rank(), 0), free.size(),
                                               std::move(form.table)));
        }
      }
      return out;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t index = 0;
      for (auto& [table, set] : Enumerator(monoid, k).run()) {
        if (flavor == ASetFlavor::pc && !is_pc_aset(set)) {
          continue;
        }
        out.push_back(set.renamed(class_name(k, index++)));
      }
    }
    return out;
  }

}  // namespace kprime
