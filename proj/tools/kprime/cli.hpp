#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kprime::cli {

  // Exit codes.
  inline constexpr int kOk           = 0;
  inline constexpr int kCheckFailed  = 1;  // a verification found a counterexample
  inline constexpr int kInputError   = 2;  // bad flags, unreadable or invalid input

  // Runs one command line (without the program name). Query commands
  // (validate, pc, enumerate, k0, g0, burnside) exit 0 whatever the answer;
  // verification commands (devissage, localize, acgw, verify) exit 1 when a
  // check fails.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Default seed: KPRIME_SEED when set and numeric, else kDefaultSeed.
  std::uint64_t default_seed();

}  // namespace kprime::cli
