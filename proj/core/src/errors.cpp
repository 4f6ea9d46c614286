#include "kprime/errors.hpp"

#include <string>

namespace kprime {

  namespace {
    std::string triple(Elem a, Elem b, Elem c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }
  }  // namespace

  NonAssociative::NonAssociative(Elem a, Elem b, Elem c)
      : Error("multiplication is not associative at " + triple(a, b, c)),
        witness{a, b, c} {}

  BadUnit::BadUnit(Elem a)
      : Error("element 1 is not a two-sided identity at " + std::to_string(a)),
        witness(a) {}

  BadZero::BadZero(Elem a)
      : Error("element 0 is not absorbing at " + std::to_string(a)), witness(a) {}

  NotPc::NotPc(std::array<Elem, 3> w)
      : Error("monoid is not partially cancellative, witness "
              + triple(w[0], w[1], w[2])),
        witness(w) {}

  NotDenominatorSet::NotDenominatorSet(std::string cond, Elem x, Elem y)
      : Error("powers of s do not form a two-sided denominator set: " + cond
              + " fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
        condition(std::move(cond)),
        a(x),
        b(y) {}

  ParseError::ParseError(std::size_t l, std::string const& what)
      : Error("line " + std::to_string(l) + ": " + what), line(l) {}

}  // namespace kprime
