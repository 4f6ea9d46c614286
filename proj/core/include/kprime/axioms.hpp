#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kprime/aset.hpp"
#include "kprime/monoid.hpp"
#include "kprime/rng.hpp"

namespace kprime {

  // Outcome of sampling one axiom over one monoid. Each failure is a
  // replayable text dump of the offending diagram (A-set tables and subset
  // members).
  struct AxiomReport {
    std::string              axiom;
    std::string              monoid;
    std::size_t              tested = 0;
    std::vector<std::string> failures;
    std::uint64_t            seed = kDefaultSeed;

    bool passed() const {
      return failures.empty();
    }
  };

  // {axiom, monoid, tested, failures, seed}.
  std::string to_json(AxiomReport const& r);
  // Combines reports for the same axiom; tested counts add, failures
  // concatenate in argument order.
  AxiomReport merge(AxiomReport a, AxiomReport const& b);

  struct SampleConfig {
    std::size_t   samples  = 1000;  // instances per axiom
    std::uint64_t seed     = kDefaultSeed;
    std::size_t   max_rank = 8;     // non-base points of a sampled A-set
    std::size_t   max_failures = 5;  // dumps kept per report
  };

  // A random A-set: a quotient of a wedge of one or two copies of A by a
  // random congruence, sometimes further collapsed by a random A-subset,
  // with occasional point and wedge shapes. Rank at most max_rank.
  FiniteASet random_aset(MonoidPtr const& a, Rng& rng, std::size_t max_rank);
  // The A-subset generated by a few random points; base-only and whole-set
  // subsets turn up with fixed probability.
  ASubset random_subset(FiniteASet const& x, Rng& rng);
  // A random relabelling of x and the isomorphism x -> relabelled.
  ASetMap random_iso(FiniteASet const& x, Rng& rng);

  // Axiom ids: qe-i, qe-ii, qe-iii, qe-iv-epi-compose, qe-iv-epi-pullback,
  // qe-iv-monic-compose, qe-iv-monic-pullback.
  std::vector<AxiomReport> check_quasi_exact(MonoidPtr const& a, SampleConfig const& cfg);
  // cgw-Z, cgw-I, cgw-A, cgw-K, cgw-M, cgw-iso.
  std::vector<AxiomReport> check_cgw(MonoidPtr const& a, SampleConfig const& cfg);
  // acgw-P, acgw-U, acgw-S, acgw-S-dual, acgw-PP, acgw-PP-dual,
  // distinguished-square.
  std::vector<AxiomReport> check_acgw(MonoidPtr const& a, SampleConfig const& cfg);
  // first-isomorphism: Y/(Y n Z) >-> X/Z ->> X/(Y u Z) is admissible.
  AxiomReport check_first_isomorphism(MonoidPtr const& a, SampleConfig const& cfg);

  // Every suite above, in that order.
  std::vector<AxiomReport> check_all_axioms(MonoidPtr const& a, SampleConfig const& cfg);
  std::vector<std::string> axiom_ids();

}  // namespace kprime
