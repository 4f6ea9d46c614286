#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "kprime/types.hpp"

namespace kprime {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input that is not even a square table, or has out-of-range entries.
  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  class NonAssociative : public Error {
   public:
    NonAssociative(Elem a, Elem b, Elem c);
    std::array<Elem, 3> witness;
  };

  class BadUnit : public Error {
   public:
    explicit BadUnit(Elem a);
    Elem witness;
  };

  class BadZero : public Error {
   public:
    explicit BadZero(Elem a);
    Elem witness;
  };

  class NotPc : public Error {
   public:
    explicit NotPc(std::array<Elem, 3> w);
    std::array<Elem, 3> witness;
  };

  class NotHomomorphism : public Error {
   public:
    using Error::Error;
  };

  class NotAutomorphism : public Error {
   public:
    using Error::Error;
  };

  class NotDenominatorSet : public Error {
   public:
    NotDenominatorSet(std::string condition, Elem a, Elem b);
    std::string condition;
    Elem        a;
    Elem        b;
  };

  class NotClosed : public Error {
   public:
    using Error::Error;
  };

  class InvalidAction : public Error {
   public:
    using Error::Error;
  };

  class NotMonic : public Error {
   public:
    using Error::Error;
  };

  class NotEpi : public Error {
   public:
    using Error::Error;
  };

  class NotAbelian : public Error {
   public:
    using Error::Error;
  };

  class NotFiniteLength : public Error {
   public:
    using Error::Error;
  };

  class FlavorUnavailable : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what);
    std::size_t line;
  };

}  // namespace kprime
