#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kprime/monoid.hpp"
#include "kprime/types.hpp"

namespace kprime {

  // A finite pointed left A-set stored as a full action table.
  //
  // Points are 0..m-1 with the base point at 0. `act(a, x)` is the row-major
  // entry [a * m + x]. Instances are immutable and cheap to copy (the monoid
  // is shared).
  class FiniteASet {
   public:
    // Throws InvalidAction if the table is not a pointed action:
    // 1x = x, *x = base, a(base) = base, (ab)x = a(bx).
    static FiniteASet from_table(MonoidPtr monoid, std::string name, std::size_t m,
                                 std::vector<Elem> act);
    static FiniteASet from_rows(MonoidPtr monoid, std::string name,
                                std::vector<std::vector<Elem>> const& rows);

    MonoidPtr const& monoid() const noexcept {
      return _monoid;
    }
    // Number of points, base included.
    std::size_t size() const noexcept {
      return _m;
    }
    // Number of non-base points, the size metric used for bounds.
    std::size_t rank() const noexcept {
      return _m - 1;
    }
    Elem act(Elem a, Elem x) const {
      return _act[a * _m + x];
    }
    std::vector<Elem> const& table() const noexcept {
      return _act;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    FiniteASet renamed(std::string name) const;

   private:
    FiniteASet(MonoidPtr monoid, std::string name, std::size_t m, std::vector<Elem> act)
        : _monoid(std::move(monoid)), _name(std::move(name)), _m(m), _act(std::move(act)) {}

    MonoidPtr         _monoid;
    std::string       _name;
    std::size_t       _m;
    std::vector<Elem> _act;
  };

  // A pointed A-subset: contains the base point and is closed under the
  // action. Stored as a membership mask over the parent's points.
  class ASubset {
   public:
    // Throws NotClosed.
    static ASubset make(FiniteASet const& parent, std::vector<Elem> const& members);
    static ASubset from_mask(FiniteASet const& parent, std::vector<bool> mask);
    // For masks already known to be closed (unions, intersections, orbits).
    static ASubset from_mask_unchecked(std::vector<bool> mask) {
      return ASubset(std::move(mask));
    }

    bool contains(Elem x) const {
      return _mask[x];
    }
    std::vector<Elem>        members() const;
    std::vector<bool> const& mask() const noexcept {
      return _mask;
    }
    std::size_t size() const;  // base included
    bool        operator==(ASubset const& other) const = default;
    bool        is_subset_of(ASubset const& other) const;

   private:
    explicit ASubset(std::vector<bool> mask) : _mask(std::move(mask)) {}
    std::vector<bool> _mask;
  };

  // A base-preserving equivariant map.
  struct ASetMap {
    FiniteASet        source;
    FiniteASet        target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const {
      return map[x];
    }
  };

  // Throws InvalidAction unless `map` preserves the base point and commutes
  // with the action of every monoid element.
  ASetMap make_aset_map(FiniteASet source, FiniteASet target, std::vector<Elem> map);
  ASetMap identity_map(FiniteASet const& x);
  ASetMap compose(ASetMap const& g, ASetMap const& f);

  bool is_injective(ASetMap const& f);
  bool is_surjective(ASetMap const& f);
  bool is_bijective(ASetMap const& f);
  // Admissible monic: injective A-map. Admissible epi: surjective and
  // injective off the preimage of the base point, i.e. a quotient by its
  // kernel up to isomorphism.
  bool is_admissible_monic(ASetMap const& f);
  bool is_admissible_epi(ASetMap const& f);
  // i is a kernel of j and j a cokernel of i.
  bool is_admissible_sequence(ASetMap const& i, ASetMap const& j);

  // Preimage of the base point.
  ASubset kernel(ASetMap const& f);
  ASubset image(ASetMap const& f);
  ASubset preimage(ASetMap const& f, ASubset const& y);

  FiniteASet point_aset(MonoidPtr const& monoid);
  // A acting on itself by left multiplication.
  FiniteASet regular_aset(MonoidPtr const& monoid);
  // Wedge of k copies of A.
  FiniteASet free_aset(MonoidPtr const& monoid, std::size_t k);
  FiniteASet relabel(FiniteASet const& x, std::vector<Elem> const& perm);

  struct Wedge {
    FiniteASet set;
    ASetMap    left;
    ASetMap    right;
    ASetMap    collapse_left;   // X v W ->> W
    ASetMap    collapse_right;  // X v W ->> X
  };
  // Points: base, then X's non-base points, then W's.
  Wedge wedge(FiniteASet const& x, FiniteASet const& w);

  // Witness (a, b, x) with a != b and ax = bx != base. The condition is
  // checked over whatever monoid acts; it does not require the monoid itself
  // to be pc.
  Decision is_pc_aset(FiniteASet const& x);
  // Wedge of copies of A up to isomorphism.
  bool is_free(FiniteASet const& x);

  struct SubASet {
    FiniteASet set;
    ASetMap    inclusion;
  };
  // Y as an A-set in its own right, points in increasing order.
  SubASet restrict_to(FiniteASet const& x, ASubset const& y);

  struct QuotientASet {
    FiniteASet set;
    ASetMap    projection;
  };
  // Points (X \ Y) and base, in increasing order.
  QuotientASet quotient_aset(FiniteASet const& x, ASubset const& y);

  // X modulo the smallest A-congruence identifying each pair. The class of
  // the base point is the new base; other classes follow their least member.
  QuotientASet quotient_by_pairs(FiniteASet const& x,
                                 std::vector<std::pair<Elem, Elem>> const& pairs);

  ASubset subset_union(ASubset const& y, ASubset const& z);
  ASubset subset_intersection(ASubset const& y, ASubset const& z);
  // (union, intersection).
  std::pair<ASubset, ASubset> lattice_ops(ASubset const& y, ASubset const& z);

  // Smallest A-subset containing `seeds`.
  ASubset generated_subset(FiniteASet const& x, std::span<Elem const> seeds);
  // Every A-subset of x, sorted by (size, members).
  std::vector<ASubset> all_subsets(FiniteASet const& x);
  // I.X for an ideal I of the acting monoid.
  ASubset ideal_times(FiniteASet const& x, Ideal const& ideal);

  // The isomorphism Y/(Y n Z) -> (Y u Z)/Z, checked equivariant and bijective.
  ASetMap noether_witness(FiniteASet const& x, ASubset const& y, ASubset const& z);

  struct Pushout {
    FiniteASet set;
    ASetMap    from_left;   // X -> P
    ASetMap    from_right;  // W -> P
  };
  // X u_Y W for monics f: Y -> X, g: Y -> W; the wedge X v W modulo the
  // identification f(y) ~ g(y). Throws NotMonic.
  Pushout pushout(ASetMap const& f, ASetMap const& g);
  // Same construction for arbitrary maps with a common source (congruence
  // closure on the wedge).
  Pushout pushout_of(ASetMap const& f, ASetMap const& g);

  struct Pullback {
    FiniteASet set;
    ASetMap    to_left;   // P -> X
    ASetMap    to_right;  // P -> W
  };
  // X x_Z W for admissible epis p: X -> Z, q: W -> Z. Throws NotEpi.
  Pullback pullback(ASetMap const& p, ASetMap const& q);
  // Pairs agreeing in the common target for arbitrary maps; (base, base) is
  // the base point.
  Pullback fiber_product(ASetMap const& f, ASetMap const& g);

  // B ^_A X for f: A -> B, computed as (B ^ X) modulo b f(a) ^ x ~ b ^ a x.
  FiniteASet base_change(MonoidMap const& f, FiniteASet const& x);
  // Y over B viewed as an A-set through f: A -> B.
  FiniteASet restrict_scalars(MonoidMap const& f, FiniteASet const& y);

  struct CanonicalASet {
    std::vector<Elem> table;    // relabelled action table
    std::vector<Elem> relabel;  // old point -> canonical point

    bool operator==(CanonicalASet const& o) const {
      return table == o.table;
    }
  };
  // Label-invariant: equal tables exactly when the A-sets are isomorphic.
  CanonicalASet canonical_form(FiniteASet const& x);
  // Compact string key for a canonical form, used to index classes.
  std::string canonical_key(FiniteASet const& x);
  // A bijection x -> y that is an A-set isomorphism, if one exists.
  std::optional<std::vector<Elem>> iso_test(FiniteASet const& x, FiniteASet const& y);

  enum class ASetFlavor { all, pc, free };
  char const* to_string(ASetFlavor f);

  // Isomorphism classes of A-sets with at most n non-base points, point
  // included, sorted by (rank, canonical table). Each returned A-set is in
  // canonical form.
  std::vector<FiniteASet> enumerate_asets(MonoidPtr const& monoid, std::size_t n,
                                          ASetFlavor flavor);

}  // namespace kprime
