#include "kprime/builders.hpp"

#include <string>

#include "kprime/errors.hpp"

namespace kprime {

  FiniteMonoid make_f1() {
    return FiniteMonoid::from_table("F1", 2, {0, 0, 0, 1});
  }

  FiniteMonoid make_zero_monoid() {
    return FiniteMonoid::from_table("zero", 1, {0});
  }

  FiniteMonoid make_truncated_polynomial(std::size_t n) {
    if (n == 0) {
      throw Error("N/t^0 is the zero monoid; use make_zero_monoid");
    }
    // Index i + 1 holds t^i.
    std::size_t const size = n + 1;
    std::vector<Elem> table(size * size, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i + j < n) {
          table[(i + 1) * size + (j + 1)] = static_cast<Elem>(i + j + 1);
        }
      }
    }
    return FiniteMonoid::from_table("N/t^" + std::to_string(n), size, std::move(table));
  }

  FiniteMonoid make_cyclic_monoid(std::size_t n, std::size_t l) {
    if (l == 0) {
      throw Error("cyclic monoid needs a positive period");
    }
    std::size_t const powers = n + l;  // t^0 .. t^(n+l-1)
    std::size_t const size   = powers + 1;
    auto              reduce = [&](std::size_t k) {
      return k < powers ? k : n + (k - n) % l;
    };
    std::vector<Elem> table(size * size, 0);
    for (std::size_t i = 0; i < powers; ++i) {
      for (std::size_t j = 0; j < powers; ++j) {
        table[(i + 1) * size + (j + 1)] = static_cast<Elem>(reduce(i + j) + 1);
      }
    }
    return FiniteMonoid::from_table(
        "C(" + std::to_string(n) + "," + std::to_string(l) + ")", size, std::move(table));
  }

  FiniteMonoid make_prototype(std::size_t n) {
    return make_cyclic_monoid(n, 1).renamed("proto" + std::to_string(n));
  }

  FiniteMonoid make_group_monoid(FiniteGroup const& g) {
    std::size_t const size = g.size() + 1;
    std::vector<Elem> table(size * size, 0);
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        table[(a + 1) * size + (b + 1)] = static_cast<Elem>(g.mul(a, b) + 1);
      }
    }
    return FiniteMonoid::from_table(g.name() + "+", size, std::move(table));
  }

  FiniteMonoid make_idempotent_monoid() {
    return FiniteMonoid::from_rows("idem", {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
  }

  FiniteMonoid make_left_zero_monoid() {
    return FiniteMonoid::from_rows("leftzero",
                                   {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 2, 2}, {0, 3, 3, 3}});
  }

  MonoidMap group_inversion(MonoidPtr const& group_monoid, FiniteGroup const& g) {
    std::vector<Elem> map(g.size() + 1, 0);
    for (std::size_t a = 0; a < g.size(); ++a) {
      map[a + 1] = static_cast<Elem>(g.inverse(a) + 1);
    }
    return make_monoid_map(group_monoid, group_monoid, std::move(map));
  }

}  // namespace kprime
