#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kprime/aset.hpp"
#include "kprime/types.hpp"

namespace kprime {

  // A finite N-set: a pointed set with a successor map fixing the base point.
  class FunctionalNSet {
   public:
    // Throws MalformedTable unless succ is a self-map with succ[0] = 0.
    static FunctionalNSet make(std::string name, std::vector<Elem> succ);

    std::size_t size() const noexcept {
      return _succ.size();
    }
    std::size_t rank() const noexcept {
      return _succ.size() - 1;
    }
    Elem succ(Elem x) const {
      return _succ[x];
    }
    std::vector<Elem> const& succ_map() const noexcept {
      return _succ;
    }
    std::string const& name() const noexcept {
      return _name;
    }

   private:
    FunctionalNSet(std::string name, std::vector<Elem> succ)
        : _name(std::move(name)), _succ(std::move(succ)) {}

    std::string       _name;
    std::vector<Elem> _succ;
  };

  // base <- x1 <- ... <- xk.
  FunctionalNSet path_nset(std::size_t k);
  // A d-cycle disjoint from the base point.
  FunctionalNSet loop_nset(std::size_t d);

  struct NSetClass {
    bool                     rooted_tree = true;
    std::vector<std::size_t> loop_lengths;  // sorted; empty for a rooted tree

    bool operator==(NSetClass const&) const = default;
  };

  NSetClass classify_nset(FunctionalNSet const& x);

  // Trees of depth d become N/t^max(d,1)-sets. Graphs with loops become sets
  // over the cyclic monoid t^(N+L) = t^N, where N bounds the number of steps
  // before any point lands on a cycle (at least 1) and L is the lcm of the
  // cycle lengths. Element t^i acts as the i-th iterate of succ.
  FiniteASet to_truncated_aset(FunctionalNSet const& x);

  // Isomorphism classes with at most n non-base points, sorted by
  // (rank, canonical successor table); each result is in canonical form.
  std::vector<FunctionalNSet> enumerate_nsets(std::size_t n);
  // Label-invariant key.
  std::string nset_key(FunctionalNSet const& x);

  // Successor value marking a tail-root: the successors of such a point form
  // a free chain tv, t^2v, ... outside the core.
  inline constexpr Elem kTail = ~Elem{0};

  // A finitely generated N-set: a finite core with a partial successor,
  // where each tail-root starts an infinite free chain.
  class FgNSet {
   public:
    // Throws MalformedTable on out-of-range successors or succ[0] != 0.
    static FgNSet make(std::string name, std::vector<Elem> succ);
    static FgNSet from_finite(FunctionalNSet const& x);

    std::size_t size() const noexcept {
      return _succ.size();
    }
    // Non-base core points, the size metric for bounds.
    std::size_t core_rank() const noexcept {
      return _succ.size() - 1;
    }
    Elem succ(Elem x) const {
      return _succ[x];
    }
    bool is_root(Elem x) const {
      return _succ[x] == kTail;
    }
    std::vector<Elem> const& succ_map() const noexcept {
      return _succ;
    }
    std::vector<Elem> roots() const;
    bool              is_finite() const {
      return roots().empty();
    }
    std::string const& name() const noexcept {
      return _name;
    }
    FgNSet renamed(std::string name) const;

   private:
    FgNSet(std::string name, std::vector<Elem> succ)
        : _name(std::move(name)), _succ(std::move(succ)) {}

    std::string       _name;
    std::vector<Elem> _succ;
  };

  // [N]: one tail-root and nothing else.
  FgNSet free_chain();

  // Shift every tail-root with exactly one core predecessor into that
  // predecessor's chain, repeatedly, then relabel canonically. Two FgNSets
  // are isomorphic exactly when their canonical forms have equal tables.
  FgNSet canonicalize(FgNSet const& x);
  std::string fgn_key(FgNSet const& x);
  // Isomorphism between the reduced cores of x and y, preserving base,
  // successor and tail-roots.
  std::optional<std::vector<Elem>> fgn_iso(FgNSet const& x, FgNSet const& y);

  // A forward-closed subset: a core mask closed under succ, plus for each
  // tail-root outside the mask an entry offset k >= 1 (the chain from t^k v
  // on belongs to the subset) or 0 when the chain is not entered.
  struct FgnSubset {
    std::vector<bool>        core;
    std::vector<std::size_t> entry;

    bool operator==(FgnSubset const&) const = default;
  };

  // All forward-closed subsets with entry offsets at most max_offset.
  std::vector<FgnSubset> fgn_subsets(FgNSet const& x, std::size_t max_offset);
  // Throws NotClosed.
  void   check_closed(FgNSet const& x, FgnSubset const& y);
  // X/Y, canonicalized. A tail entered at offset k becomes a path of k points
  // ending at the base.
  FgNSet fgn_quotient(FgNSet const& x, FgnSubset const& y);
  // Y as an FgNSet, canonicalized. A tail entered at offset k becomes a
  // fresh tail-root.
  FgNSet fgn_subobject(FgNSet const& x, FgnSubset const& y);

  // Reduced isomorphism classes with core rank at most `core_bound`. With
  // `tails` false only finite N-sets are produced.
  std::vector<FgNSet> enumerate_fgnsets(std::size_t core_bound, bool tails);

  // Graphviz rendering; tails are drawn as dashed edges to an ellipsis node.
  std::string to_dot(FgNSet const& x);
  std::string to_dot(FunctionalNSet const& x);

}  // namespace kprime
