#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kprime/rng.hpp"

namespace kprime::verify {

  struct Options {
    std::string   corpus_dir;
    std::uint64_t seed = kDefaultSeed;
    // Randomized instances per axiom, summed over the corpus monoids.
    std::size_t axiom_instances = 10000;
  };

  struct CriterionResult {
    std::string id;
    std::string title;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
  };

  // "1" .. "7", then "8a" .. "8d" for the four localization cases.
  std::vector<std::string> criterion_ids();
  std::string              criterion_title(std::string const& id);

  // Never throws: an exception inside a criterion is reported as a failure.
  CriterionResult              run_criterion(std::string const& id, Options const& opts);
  std::vector<CriterionResult> run_all(Options const& opts);

  // "PASS  <id>  <title>  (<seconds> s)  <detail>".
  std::string format_line(CriterionResult const& r);

  // Independent oracles, exposed for unit tests.
  //
  // Cycle structure of a functional graph by direct iteration: whether
  // every orbit reaches the base, and the sorted lengths of the cycles that
  // avoid it.
  struct CycleOracle {
    bool                     rooted_tree;
    std::vector<std::size_t> loop_lengths;
  };
  CycleOracle cycle_oracle(std::vector<std::uint32_t> const& succ);

  // Number of conjugacy classes of subgroups of a group given by its Cayley
  // table (identity 0), by brute force over all subsets.
  std::size_t subgroup_class_count(std::vector<std::vector<std::size_t>> const& table);

}  // namespace kprime::verify
