#pragma once

#include <cstddef>

#include "kprime/group.hpp"
#include "kprime/monoid.hpp"

namespace kprime {

  // {*, 1}, the initial pointed monoid.
  FiniteMonoid make_f1();
  // {* = 1}.
  FiniteMonoid make_zero_monoid();
  // N/t^n = {*, 1, t, ..., t^(n-1)} with t^n = *. Needs n >= 1; N/t is F1.
  FiniteMonoid make_truncated_polynomial(std::size_t n);
  // {*, 1, t, ..., t^(N+L-1)} with t^(N+L) = t^N. No power of t is *.
  FiniteMonoid make_cyclic_monoid(std::size_t n, std::size_t l);
  // {*, 1, t, ..., t^N} with t^N = t^(N+1).
  FiniteMonoid make_prototype(std::size_t n);
  // G_+, with group index g stored at monoid index g + 1.
  FiniteMonoid make_group_monoid(FiniteGroup const& g);
  // {*, 1, e} with e^2 = e.
  FiniteMonoid make_idempotent_monoid();
  // {*, 1, a, b} where a and b are left zeros: x*y = x for x, y in {a, b}.
  FiniteMonoid make_left_zero_monoid();

  // Inversion on an abelian group, as an automorphism of G_+.
  MonoidMap group_inversion(MonoidPtr const& group_monoid, FiniteGroup const& g);

}  // namespace kprime
