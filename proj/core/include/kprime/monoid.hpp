#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kprime/group.hpp"
#include "kprime/types.hpp"

namespace kprime {

  // A finite pointed monoid stored as a full multiplication table.
  //
  // Elements are indices 0..n-1 with the zero (written *) at index 0 and the
  // identity at index 1. The only exception is the zero monoid {* = 1}, which
  // has a single element and identity 0. Instances are immutable.
  class FiniteMonoid {
   public:
    // Checks every invariant and throws MalformedTable, BadZero, BadUnit or
    // NonAssociative on failure. `rows[a][b]` is the product a*b.
    static FiniteMonoid from_rows(std::string                          name,
                                  std::vector<std::vector<Elem>> const& rows);
    static FiniteMonoid from_table(std::string       name,
                                   std::size_t       n,
                                   std::vector<Elem> table);

    std::size_t size() const noexcept {
      return _n;
    }
    Elem star() const noexcept {
      return 0;
    }
    Elem one() const noexcept {
      return _n == 1 ? 0 : 1;
    }
    Elem mul(Elem a, Elem b) const {
      return _table[a * _n + b];
    }
    std::vector<Elem> const& table() const noexcept {
      return _table;
    }
    std::string const& name() const noexcept {
      return _name;
    }

    FiniteMonoid renamed(std::string name) const;
    bool         is_commutative() const;
    // a^k, with a^0 = one.
    Elem power(Elem a, std::size_t k) const;

    // Same size and table; names are ignored.
    bool same_table(FiniteMonoid const& other) const noexcept {
      return _n == other._n && _table == other._table;
    }

   private:
    FiniteMonoid(std::string name, std::size_t n, std::vector<Elem> table)
        : _name(std::move(name)), _n(n), _table(std::move(table)) {}

    std::string       _name;
    std::size_t       _n;
    std::vector<Elem> _table;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  inline MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  // The validating entry point from a raw table.
  FiniteMonoid validate_monoid(std::string                          name,
                               std::vector<std::vector<Elem>> const& rows);

  struct MonoidMap {
    MonoidPtr         source;
    MonoidPtr         target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const {
      return map[a];
    }
  };

  // Throws NotHomomorphism unless `map` preserves zero, identity and products.
  MonoidMap make_monoid_map(MonoidPtr source, MonoidPtr target, std::vector<Elem> map);
  MonoidMap identity_map(MonoidPtr m);
  MonoidMap compose(MonoidMap const& g, MonoidMap const& f);
  bool      is_automorphism(MonoidMap const& f);

  // A two-sided ideal containing the zero.
  class Ideal {
   public:
    // Throws NotClosed if `members` is not a two-sided ideal containing *.
    static Ideal make(FiniteMonoid const& parent, std::vector<Elem> members);

    bool contains(Elem a) const {
      return _mask[a];
    }
    std::vector<Elem> members() const;
    std::size_t       size() const;
    std::size_t       parent_size() const noexcept {
      return _mask.size();
    }
    bool operator==(Ideal const& other) const = default;

   private:
    explicit Ideal(std::vector<bool> mask) : _mask(std::move(mask)) {}
    std::vector<bool> _mask;
  };

  // Both cancellation laws of a partially cancellative monoid checked on all
  // triples. On failure the witness (a, b, c) has a != b and either
  // a*c = b*c != * or c*a = c*b != *. Finite monoids are noetherian, so the
  // chain condition in the definition is automatic.
  Decision is_pc_monoid(FiniteMonoid const& m);

  struct UnitGroup {
    FiniteGroup       group;
    // elements[i] is the monoid element for group index i; elements[0] = one.
    std::vector<Elem> elements;
  };

  UnitGroup units(FiniteMonoid const& m);
  bool      is_unit(FiniteMonoid const& m, Elem a);

  // Non-units together with *. Throws NotPc when m is not pc.
  Ideal maximal_ideal(FiniteMonoid const& m);

  // The smallest two-sided ideal containing `generators` and *.
  Ideal ideal_generated(FiniteMonoid const& m, std::span<Elem const> generators);
  // {x*y : x in I, y in J} closed to an ideal.
  Ideal ideal_product(FiniteMonoid const& m, Ideal const& i, Ideal const& j);

  struct MonoidQuotient {
    MonoidPtr monoid;
    MonoidMap projection;
  };

  // Elements are (A \ I) and *, in increasing index order. If I contains the
  // identity the quotient is the zero monoid.
  MonoidQuotient quotient_monoid(MonoidPtr const& a, Ideal const& i);

  // Position of s^k in the cyclic chain 1, s, s^2, ...: the first repeated
  // power is s^(index + period) = s^index.
  struct PowerCycle {
    std::size_t index;
    std::size_t period;
    // s^m for the least m >= max(index, 1) divisible by period; an idempotent.
    Elem        idempotent;
  };
  PowerCycle power_cycle(FiniteMonoid const& m, Elem s);

  struct DenominatorCheck {
    bool        holds = true;
    std::string condition;  // which Ore or reversibility clause failed
    Elem        a = 0;
    Elem        b = 0;
  };

  // Brute-force check that {s^n} is a two-sided denominator set: left and
  // right Ore conditions and left and right reversibility over all elements
  // and all distinct powers of s.
  DenominatorCheck check_denominator_set(FiniteMonoid const& m, Elem s);

  struct Localization {
    MonoidPtr  monoid;
    MonoidMap  map;
    PowerCycle cycle;
  };

  // A[1/s]. The power chain of s stabilises at the idempotent e = s^m; s
  // becomes invertible exactly when e becomes 1, so the result is A modulo
  // the congruence generated by e ~ 1. Throws NotDenominatorSet when the
  // denominator check fails.
  Localization localize(MonoidPtr const& a, Elem s);

  // (A \ *) x (B \ *) with *, componentwise product, (1, 1) at index 1 and the
  // remaining pairs in lexicographic order.
  FiniteMonoid smash(FiniteMonoid const& a, FiniteMonoid const& b);

  // Elements a t^i for a in A \ *, 0 <= i < k, and *. Products follow
  // t a = phi(a) t and t^k = *. Throws NotAutomorphism.
  FiniteMonoid twisted_truncated_extension(MonoidMap const& phi, std::size_t k);

  // Least n with m^n = {*} for the maximal ideal m, or nullopt if the powers
  // stabilise above {*}. Throws NotPc.
  std::optional<std::size_t> finite_length(FiniteMonoid const& m);

  // Backtracking search for an isomorphism a -> b fixing * and 1.
  std::optional<std::vector<Elem>> find_isomorphism(FiniteMonoid const& a,
                                                     FiniteMonoid const& b);
  inline bool isomorphic(FiniteMonoid const& a, FiniteMonoid const& b) {
    return find_isomorphism(a, b).has_value();
  }

  // A monoid generating set, units first, chosen greedily by index.
  std::vector<Elem> monoid_generators(FiniteMonoid const& m);

}  // namespace kprime
