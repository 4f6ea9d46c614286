#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kprime {

  // A finite group given by its Cayley table. The identity is index 0.
  class FiniteGroup {
   public:
    // Validates closure, identity at 0, inverses and associativity.
    static FiniteGroup from_table(std::string                            name,
                                  std::vector<std::vector<std::size_t>> const& rows);

    std::size_t size() const noexcept {
      return _n;
    }
    std::size_t mul(std::size_t g, std::size_t h) const {
      return _table[g * _n + h];
    }
    std::size_t inverse(std::size_t g) const {
      return _inverse[g];
    }
    std::string const& name() const noexcept {
      return _name;
    }
    std::vector<std::size_t> const& table() const noexcept {
      return _table;
    }
    bool is_abelian() const;

   private:
    FiniteGroup() = default;

    std::string              _name;
    std::size_t              _n = 0;
    std::vector<std::size_t> _table;
    std::vector<std::size_t> _inverse;
  };

  FiniteGroup cyclic_group(std::size_t n);
  // Symmetric group on k letters, elements ordered lexicographically by
  // permutation so the identity comes first.
  FiniteGroup symmetric_group(std::size_t k);
  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);

  // Subgroups as sorted element lists, found by closing under one new element
  // at a time starting from the trivial subgroup. Sorted by (order, members).
  std::vector<std::vector<std::size_t>> subgroups(FiniteGroup const& g);

  std::vector<std::size_t> conjugate(FiniteGroup const&               g,
                                     std::vector<std::size_t> const& subgroup,
                                     std::size_t                      by);

  // One representative per conjugacy class of subgroups, ordered by order
  // and then by member list. The trivial subgroup comes first and the whole
  // group last.
  std::vector<std::vector<std::size_t>>
  subgroup_class_representatives(FiniteGroup const& g);

}  // namespace kprime
