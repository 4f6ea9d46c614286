#pragma once

#include <string>
#include <string_view>

#include "kprime/aset.hpp"
#include "kprime/group.hpp"
#include "kprime/monoid.hpp"
#include "kprime/nset.hpp"

namespace kprime {

  // Line-based text formats. Blank lines and everything after `#` are
  // ignored; tokens are separated by whitespace.
  //
  //   monoid <name> <n>                  n rows of n products
  //   group <name> <n>                   n rows of n products, identity 0
  //   aset <name> over <monoid> <m>      one row of m points per monoid element
  //   nset <name> <n>                    `succ:` with n entries, `-` for a
  //                                      tail-root, then `tails:` listing
  //                                      the tail-roots when there are any
  //
  // Writers emit the canonical layout, so write(parse(write(x))) equals
  // write(x) byte for byte. Parse failures throw ParseError with the 1-based
  // line; semantic failures (a non-associative table, a broken action) are
  // rethrown as ParseError at the header line.

  enum class FileKind { monoid, group, aset, nset };

  // The kind named by the first header token.
  FileKind detect_kind(std::string_view text);
  char const* to_string(FileKind k);

  FiniteMonoid parse_monoid(std::string_view text);
  std::string  write_monoid(FiniteMonoid const& m);

  FiniteGroup parse_group(std::string_view text);
  std::string write_group(FiniteGroup const& g);

  // The monoid named in the header must match `monoid->name()`.
  FiniteASet  parse_aset(std::string_view text, MonoidPtr const& monoid);
  std::string write_aset(FiniteASet const& x);

  FgNSet      parse_nset(std::string_view text);
  std::string write_nset(FgNSet const& x);

  // JSON mirrors: {name, n, mul}, {name, n, mul}, {name, monoid, m, act},
  // {name, n, succ, tails} with null for a tail-root successor.
  std::string  monoid_to_json(FiniteMonoid const& m);
  FiniteMonoid monoid_from_json(std::string_view text);
  std::string  group_to_json(FiniteGroup const& g);
  FiniteGroup  group_from_json(std::string_view text);
  std::string  aset_to_json(FiniteASet const& x);
  FiniteASet   aset_from_json(std::string_view text, MonoidPtr const& monoid);
  std::string  nset_to_json(FgNSet const& x);
  FgNSet       nset_from_json(std::string_view text);

  // Whole file contents; throws Error when the file cannot be read.
  std::string read_file(std::string const& path);

}  // namespace kprime
