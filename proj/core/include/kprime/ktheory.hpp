#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kprime/aset.hpp"
#include "kprime/group.hpp"
#include "kprime/monoid.hpp"
#include "kprime/nset.hpp"
#include "kprime/smith.hpp"

namespace kprime {

  // all: every finite A-set (G_0). pc: pc A-sets (K'_0). free: wedges of A
  // (K_0). nset: finite N-sets. fgnset: finitely generated N-sets.
  enum class Flavor { all, pc, free, nset, fgnset };

  char const*           to_string(Flavor f);
  std::optional<Flavor> parse_flavor(std::string const& s);

  // One relation [X] - [Y] - [X/Y] as sparse (generator, coefficient) pairs,
  // sorted by generator, zero terms dropped.
  using Relation = std::vector<std::pair<std::size_t, std::int64_t>>;

  struct K0Presentation {
    std::string monoid;
    Flavor      flavor = Flavor::all;
    std::size_t bound  = 0;

    std::vector<std::string> generators;  // display names
    std::vector<std::string> keys;        // canonical keys, one per generator
    std::vector<std::size_t> ranks;       // non-base (core) size per generator
    std::vector<Relation>    relations;   // deduplicated, sorted

    std::vector<FiniteASet> asets;  // the generators for A-set flavours
    std::vector<FgNSet>     nsets;  // the generators for N-set flavours

    std::unordered_map<std::string, std::size_t> index;  // key -> generator

    std::optional<std::size_t> find(std::string const& key) const;
    std::size_t                size() const noexcept {
      return generators.size();
    }
  };

  // Generators are the enumerated classes of the flavour with at most
  // `bound` non-base points. A relation is kept only when Y and X/Y are
  // generators too. Throws FlavorUnavailable for the N-set flavours, which
  // take no monoid.
  K0Presentation build_presentation(MonoidPtr const& a, Flavor flavor, std::size_t bound);
  // Finite N-sets (tails = false) or finitely generated ones, by core rank.
  K0Presentation build_nset_presentation(std::size_t bound, bool tails);

  // The presented group Z^g / <relations> in Smith coordinates.
  //
  // The relation rows are first reduced to a Hermite basis H, then
  // u * H * v = diag(d). A generator combination x (row vector) has
  // coordinates x * v restricted to the columns with d_i != 1; torsion
  // coordinates are reduced mod d_i. Torsion coordinates come first, then the
  // free ones.
  struct AbGroup {
    std::size_t          generators = 0;
    std::size_t          free_rank  = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
    IntMatrix            hermite;  // H
    SmithForm            snf;
    std::vector<std::size_t> coord_cols;  // snf column behind each coordinate
    std::vector<Integer>     moduli;      // d_i for torsion coordinates, 0 for free
    Lattice                  relations{0};

    std::size_t coords() const noexcept {
      return coord_cols.size();
    }
    std::vector<Integer> reduce(std::vector<Integer> c) const;
    bool                 is_zero(std::vector<Integer> const& c) const;
    // Coordinates of a generator combination.
    std::vector<Integer> coordinates(std::vector<Integer> const& combination) const;
    // A generator combination whose class is the i-th unit coordinate.
    std::vector<Integer> lift(std::size_t coord) const;
    // "Z^r + Z/d1 + ..." or "0".
    std::string describe() const;
  };

  // Class of each generator in the AbGroup coordinates.
  struct ClassMap {
    std::vector<std::vector<Integer>> classes;

    std::vector<Integer> of(Relation const& combination, AbGroup const& g) const;
  };

  struct SmithResult {
    AbGroup  group;
    ClassMap classes;
  };

  SmithResult smith(K0Presentation const& p);

  // Checks that u and v are unimodular (u u_inv = I, v v_inv = I), that
  // u H v is the stored diagonal, and that invariant factors divide.
  bool verify_smith(AbGroup const& g);
  // Every relation row has class zero.
  bool verify_additivity(K0Presentation const& p, SmithResult const& s);
  // X -> |X| - 1 kills every relation (A-set flavours and finite N-sets).
  bool reduced_cardinality_is_additive(K0Presentation const& p);

  // A homomorphism of presented groups, given by the class in the target
  // of each source generator.
  struct Hom {
    AbGroup const*                    source;
    AbGroup const*                    target;
    std::vector<std::vector<Integer>> images;  // per source generator

    // Matrix in coordinates: row i is the image of the i-th source coordinate.
    IntMatrix coordinate_matrix() const;
    bool      is_zero() const;
    bool      is_surjective() const;
    bool      is_injective() const;
    // Generators of the kernel in source coordinates.
    std::vector<std::vector<Integer>> kernel() const;
  };

  // ker(outer) is contained in im(inner), both maps into the same group.
  bool kernel_in_image(Hom const& outer, Hom const& inner);

  struct ScanRow {
    std::size_t          bound = 0;
    std::size_t          generators = 0;
    std::size_t          relations  = 0;
    std::size_t          free_rank  = 0;
    std::vector<Integer> torsion;
    // The map from the previous bound's group induced by including
    // generators; absent for the first row.
    std::optional<bool> iso_from_previous;
  };

  std::vector<ScanRow> stabilization_scan(MonoidPtr const& a, Flavor flavor, std::size_t n_min,
                                          std::size_t n_max);
  std::vector<ScanRow> nset_stabilization_scan(bool tails, std::size_t n_min, std::size_t n_max);

  struct DevissageReport {
    std::string              monoid;
    std::size_t              bound  = 0;
    std::size_t              length = 0;
    std::size_t              checked = 0;
    std::vector<std::string> failures;  // classes whose identity failed

    bool passed() const {
      return failures.empty();
    }
  };

  // For every pc class X in the bound: the m-adic filtration, graded pieces
  // killed by m, and class(X) = sum class(gr_i X). Throws NotPc and
  // NotFiniteLength.
  DevissageReport devissage_check(MonoidPtr const& a, std::size_t bound);

  struct LocalizationStage {
    std::size_t bound = 0;
    std::string quotient_group, ambient_group, localized_group;
    bool        j_defined       = true;  // j^* lands in the pc classes
    bool        composite_zero  = false;
    bool        j_surjective    = false;
    bool        kernel_in_image = false;

    bool exact() const {
      return j_defined && composite_zero && j_surjective && kernel_in_image;
    }
    // Everything except the bound itself.
    bool same_outcome(LocalizationStage const& o) const;
  };

  struct LocalizationReport {
    std::string monoid;
    Elem        s = 0;
    bool        ambient_pc = false;
    std::string quotient_monoid, localized_monoid;
    std::vector<LocalizationStage> stages;
    // First bound whose outcome repeats at the next bound.
    std::optional<std::size_t> stabilized_bound;

    LocalizationStage const& final_stage() const {
      return stages.back();
    }
    bool exact() const {
      return stabilized_bound.has_value() && final_stage().exact();
    }
  };

  // The pi_0 sequence K'_0(A/sA) -> K'_0(A) -> K'_0(A[1/s]) -> 0 at bounds
  // n_min, n_min + 1, ... until two consecutive outcomes agree (or n_max).
  // i_* restricts along A -> A/AsA; j^* is base change along A -> A[1/s].
  // Throws NotAbelian and NotDenominatorSet.
  LocalizationReport localization_check(MonoidPtr const& a, Elem s, std::size_t n_min,
                                        std::size_t n_max);

  struct BurnsideReport {
    std::string                      group;
    std::size_t                      order = 0;
    std::vector<std::vector<std::size_t>> classes;  // subgroup class representatives
    std::size_t                      generators = 0;
    std::size_t                      free_rank  = 0;
    std::vector<Integer>             torsion;
    // The transitive sets (G/H)_+ form a basis of the presented group.
    bool                             transitive_basis = false;
    std::vector<std::vector<std::int64_t>> marks;  // marks[i][j] = |(G/H_i)^{H_j}|
    // product[i][j][k]: coefficient of [G/H_k] in [G/H_i][G/H_j].
    std::vector<std::vector<std::vector<std::int64_t>>> product;
    // Marks are multiplicative on products.
    bool marks_multiplicative = false;
  };

  // (G/H)_+ with cosets ordered by least element; the coset H is point 1.
  FiniteASet coset_aset(MonoidPtr const& group_monoid, FiniteGroup const& g,
                        std::vector<std::size_t> const& h);
  BurnsideReport burnside(FiniteGroup const& g);

  struct NSetG0Report {
    bool                               tails = false;
    std::size_t                        bound = 0;
    K0Presentation                     presentation;
    SmithResult                        smith;
    std::optional<std::size_t>         s0;      // generator index of S^0
    std::optional<std::size_t>         chain;   // [N], tails flavour only
    std::vector<std::size_t>           loops;   // generator index of L_d, d = 1..bound
  };

  // Finite N-sets and finitely generated N-sets at the same bound.
  std::pair<NSetG0Report, NSetG0Report> g0_nset_reports(std::size_t bound);
  NSetG0Report                          g0_nset_report(std::size_t bound, bool tails);

}  // namespace kprime
