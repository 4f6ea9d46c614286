#include "kprime/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kprime/axioms.hpp"
#include "kprime/errors.hpp"
#include "kprime/io.hpp"
#include "kprime/ktheory.hpp"

namespace kprime::verify {

  namespace {

    // Runtime ceilings in seconds; 0 means none.
    constexpr double kLimitPcTrees    = 60;
    constexpr double kLimitKPrime     = 120;
    constexpr double kLimitBurnside   = 60;
    constexpr double kLimitAxioms     = 300;

    // Bounds.
    constexpr std::size_t kTreeVertices      = 6;
    constexpr std::size_t kFiniteNSetBound   = 5;
    constexpr std::size_t kTailNSetBound     = 4;
    constexpr std::size_t kDevissageBound    = 5;
    constexpr std::size_t kLocalizationMin   = 2;
    constexpr std::size_t kLocalizationMax   = 6;

    struct Outcome {
      bool        passed = true;
      std::string detail;

      void fail(std::string const& why) {
        if (passed) {
          detail.clear();
        }
        passed = false;
        detail += (detail.empty() ? "" : "; ") + why;
      }
      void note(std::string const& s) {
        if (passed) {
          detail += (detail.empty() ? "" : "; ") + s;
        }
      }
    };

    std::string path_in(Options const& o, std::string const& file) {
      return (std::filesystem::path(o.corpus_dir) / file).string();
    }

    MonoidPtr load_monoid(Options const& o, std::string const& file) {
      return share(parse_monoid(read_file(path_in(o, file))));
    }

    FiniteGroup load_group(Options const& o, std::string const& file) {
      return parse_group(read_file(path_in(o, file)));
    }

    std::vector<std::string> corpus_monoid_files(Options const& o) {
      std::vector<std::string> files;
      for (auto const& e : std::filesystem::directory_iterator(o.corpus_dir)) {
        if (e.path().extension() == ".monoid") {
          files.push_back(e.path().filename().string());
        }
      }
      std::sort(files.begin(), files.end());
      return files;
    }

    std::string str(Integer const& v) {
      return to_string(v);
    }

    std::string join_ints(std::vector<Integer> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + str(v[i]);
      }
      return s + ")";
    }

    // Determinant of the coordinate rows of the given generators.
    Integer basis_determinant(SmithResult const& s, std::vector<std::size_t> const& gens) {
      std::size_t const k = s.group.coords();
      if (gens.size() != k) {
        return 0;
      }
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          m.at(i, j) = s.classes.classes[gens[i]][j];
        }
      }
      return determinant(m);
    }

    std::vector<Integer> combination(SmithResult const& s, std::vector<std::pair<std::size_t, Integer>> const& terms) {
      std::vector<Integer> out(s.group.coords());
      for (auto const& [g, c] : terms) {
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] += c * s.classes.classes[g][i];
        }
      }
      return s.group.reduce(std::move(out));
    }

    ////////////////////////////////////////////////////////////////////////
    // 1. pc N-sets are rooted trees
    ////////////////////////////////////////////////////////////////////////

    Outcome pc_trees(Options const&) {
      Outcome                     out;
      std::size_t                 raw = 0;
      std::map<std::string, bool> pc_by_class;
      std::size_t                 disagreements = 0;
      for (std::size_t k = 0; k <= kTreeVertices; ++k) {
        std::size_t const n = k + 1;
        std::vector<Elem> succ(n, 0);
        while (true) {
          ++raw;
          auto const x      = FunctionalNSet::make("g", succ);
          auto const oracle = cycle_oracle(succ);
          auto const cls    = classify_nset(x);
          if (cls.rooted_tree != oracle.rooted_tree || cls.loop_lengths != oracle.loop_lengths) {
            ++disagreements;
          }
          auto const key = nset_key(x);
          auto       it  = pc_by_class.find(key);
          if (it == pc_by_class.end()) {
            it = pc_by_class.emplace(key, is_pc_aset(to_truncated_aset(x)).holds).first;
          }
          if (it->second != oracle.rooted_tree) {
            ++disagreements;
          }
          // Odometer over succ[1..k].
          std::size_t i = 1;
          while (i < n && ++succ[i] == n) {
            succ[i++] = 0;
          }
          if (i >= n) {
            break;
          }
        }
      }
      if (disagreements > 0) {
        out.fail(std::to_string(disagreements) + " disagreements");
      }
      out.note(std::to_string(raw) + " raw maps, " + std::to_string(pc_by_class.size())
               + " classes, 100% agreement");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 2. K'_0 = Z through reduced cardinality
    ////////////////////////////////////////////////////////////////////////

    Outcome kprime_is_z(Options const& o) {
      Outcome out;
      struct Case {
        char const* file;
        Flavor      flavor;
        std::size_t bound;
      };
      std::vector<Case> const cases{
          {"f1.monoid", Flavor::pc, 6},     {"ntr2.monoid", Flavor::pc, 5},
          {"ntr3.monoid", Flavor::pc, 5},   {"ntr4.monoid", Flavor::pc, 5},
          {"proto1.monoid", Flavor::pc, 5}, {"proto2.monoid", Flavor::pc, 5},
          {"proto3.monoid", Flavor::pc, 5}, {"z2plus.monoid", Flavor::free, 6},
      };
      for (auto const& c : cases) {
        auto const a = load_monoid(o, c.file);
        auto const p = build_presentation(a, c.flavor, c.bound);
        auto const s = smith(p);
        std::string const tag = std::string(c.file) + " " + to_string(c.flavor) + " n="
                                + std::to_string(c.bound);
        if (s.group.free_rank != 1 || !s.group.torsion.empty()) {
          out.fail(tag + ": group is " + s.group.describe());
          continue;
        }
        if (!verify_smith(s.group) || !verify_additivity(p, s)) {
          out.fail(tag + ": Smith form or additivity check failed");
          continue;
        }
        // |X| - 1 = scale * coordinate with one fixed non-zero scale, so
        // reduced cardinality is an isomorphism onto scale * Z. The scale is
        // +-1 except for the free flavour, where the generator [A] has
        // |A| - 1 points.
        Integer scale = 0;
        bool    ok    = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
          Integer const c0 = s.classes.classes[j][0];
          Integer const r  = p.ranks[j];
          if (scale == 0 && c0 != 0) {
            scale = r / c0;
          }
          ok = ok && r == scale * c0;
        }
        Integer const expected = c.flavor == Flavor::free ? Integer(a->size() - 1) : Integer(1);
        if (!ok || (scale != expected && scale != -expected)) {
          out.fail(tag + ": class map is not reduced cardinality (scale " + str(scale) + ")");
        }
      }
      out.note(std::to_string(cases.size()) + " presentations, each Z with |X|-1 = class (free (Z/2)+: 2 * class)");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 3 and 4. G_0 of N-sets
    ////////////////////////////////////////////////////////////////////////

    Outcome finite_nsets(Options const&) {
      Outcome    out;
      auto const r = g0_nset_report(kFiniteNSetBound, false);
      auto const& s = r.smith;
      if (s.group.free_rank != kFiniteNSetBound + 1 || !s.group.torsion.empty()) {
        out.fail("group is " + s.group.describe());
        return out;
      }
      if (!r.s0 || r.loops.size() != kFiniteNSetBound) {
        out.fail("S0 or a loop class is missing from the presentation");
        return out;
      }
      std::vector<std::size_t> basis{*r.s0};
      basis.insert(basis.end(), r.loops.begin(), r.loops.end());
      auto const det = basis_determinant(s, basis);
      if (det != 1 && det != -1) {
        out.fail("[S0],[L1..L5] is not a basis (det " + str(det) + ")");
      }
      std::size_t trees = 0, rhos = 0;
      for (std::size_t g = 0; g < r.presentation.size(); ++g) {
        auto const& x   = r.presentation.nsets[g];
        auto const  f   = FunctionalNSet::make(x.name(), x.succ_map());
        auto const  cls = classify_nset(f);
        // class(X) - sum [L_d] - (rank - sum d)[S0] must vanish.
        std::vector<std::pair<std::size_t, Integer>> terms{{g, 1}};
        std::size_t                                  on_loops = 0;
        for (auto d : cls.loop_lengths) {
          terms.emplace_back(r.loops[d - 1], -1);
          on_loops += d;
        }
        terms.emplace_back(*r.s0, -Integer(f.rank() - on_loops));
        auto const diff = combination(s, terms);
        if (!s.group.is_zero(diff)) {
          out.fail(x.name() + " has class off by " + join_ints(diff));
        }
        ++(cls.rooted_tree ? trees : rhos);
      }
      out.note("Z^6 on [S0],[L1..L5]; " + std::to_string(trees) + " tree classes = (|X|-1)[S0], "
               + std::to_string(rhos) + " loop classes = loops + multiple of [S0]");
      return out;
    }

    Outcome tail_nsets(Options const&) {
      Outcome    out;
      auto const r = g0_nset_report(kTailNSetBound, true);
      auto const& s = r.smith;
      if (s.group.free_rank != kTailNSetBound + 1 || !s.group.torsion.empty()) {
        out.fail("group is " + s.group.describe());
        return out;
      }
      if (!r.s0 || !r.chain || r.loops.size() != kTailNSetBound) {
        out.fail("S0, [N] or a loop class is missing from the presentation");
        return out;
      }
      if (!s.group.is_zero(s.classes.classes[*r.s0])) {
        out.fail("[S0] is not zero");
      }
      std::vector<std::size_t> basis{*r.chain};
      basis.insert(basis.end(), r.loops.begin(), r.loops.end());
      auto const det = basis_determinant(s, basis);
      if (det != 1 && det != -1) {
        out.fail("[N],[L1..L4] is not a basis (det " + str(det) + ")");
      }
      std::size_t trees = 0;
      for (std::size_t g = 0; g < r.presentation.size(); ++g) {
        auto const& x = r.presentation.nsets[g];
        if (!x.is_finite()) {
          continue;
        }
        if (classify_nset(FunctionalNSet::make(x.name(), x.succ_map())).rooted_tree) {
          ++trees;
          if (!s.group.is_zero(s.classes.classes[g])) {
            out.fail("tree " + x.name() + " has non-zero class");
          }
        }
      }
      out.note("Z^5 on [N],[L1..L4]; [S0] = 0 and " + std::to_string(trees) + " tree classes are 0");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 5. Burnside rings
    ////////////////////////////////////////////////////////////////////////

    Outcome burnside_rings(Options const& o) {
      Outcome out;
      struct Case {
        char const* file;
        std::size_t rank;
      };
      std::vector<Case> const cases{{"trivial.group", 1}, {"z2.group", 2}, {"z3.group", 2},
                                    {"z4.group", 3},      {"s3.group", 4}};
      std::string ranks;
      for (auto const& c : cases) {
        auto const g = load_group(o, c.file);
        std::vector<std::vector<std::size_t>> rows(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
          rows[i].assign(g.table().begin() + static_cast<std::ptrdiff_t>(i * g.size()),
                         g.table().begin() + static_cast<std::ptrdiff_t>((i + 1) * g.size()));
        }
        auto const oracle = subgroup_class_count(rows);
        auto const r      = burnside(g);
        ranks += (ranks.empty() ? "" : "/") + std::to_string(r.free_rank);
        if (oracle != c.rank || r.free_rank != c.rank || !r.torsion.empty()) {
          out.fail(std::string(c.file) + ": rank " + std::to_string(r.free_rank) + ", oracle "
                   + std::to_string(oracle) + ", expected " + std::to_string(c.rank));
        }
        if (!r.transitive_basis) {
          out.fail(std::string(c.file) + ": transitive sets are not a basis");
        }
        for (std::size_t i = 0; i < r.marks.size(); ++i) {
          if (r.marks[i][i] <= 0) {
            out.fail(std::string(c.file) + ": zero diagonal mark");
          }
          for (std::size_t j = i + 1; j < r.marks.size(); ++j) {
            if (r.marks[i][j] != 0) {
              out.fail(std::string(c.file) + ": marks are not lower-triangular");
            }
          }
          if (r.marks[i][0] != static_cast<std::int64_t>(g.size() / r.classes[i].size())) {
            out.fail(std::string(c.file) + ": first mark column is not |G/H|");
          }
        }
        if (!r.marks_multiplicative) {
          out.fail(std::string(c.file) + ": marks are not multiplicative");
        }
        if (c.rank == 2 && g.size() == 2
            && r.product[0][0] != std::vector<std::int64_t>{2, 0}) {
          out.fail("[(Z/2)+]^2 != 2[(Z/2)+]");
        }
      }
      out.note("ranks " + ranks + " match subgroup classes; marks lower-triangular; [(Z/2)+]^2 = 2[(Z/2)+]");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 6. Axiom suites
    ////////////////////////////////////////////////////////////////////////

    Outcome axiom_suites(Options const& o) {
      Outcome    out;
      auto const files = corpus_monoid_files(o);
      if (files.empty()) {
        out.fail("no corpus monoids");
        return out;
      }
      SampleConfig cfg;
      cfg.seed    = o.seed;
      cfg.samples = (o.axiom_instances + files.size() - 1) / files.size();
      std::map<std::string, AxiomReport> merged;
      for (auto const& f : files) {
        for (auto const& r : check_all_axioms(load_monoid(o, f), cfg)) {
          auto it = merged.find(r.axiom);
          if (it == merged.end()) {
            merged.emplace(r.axiom, r);
          } else {
            it->second = merge(it->second, r);
          }
        }
      }
      std::size_t fewest = ~std::size_t{0};
      for (auto const& id : axiom_ids()) {
        auto const it = merged.find(id);
        if (it == merged.end()) {
          out.fail(id + " did not run");
          continue;
        }
        fewest = std::min(fewest, it->second.tested);
        if (it->second.tested < o.axiom_instances) {
          out.fail(id + " ran only " + std::to_string(it->second.tested) + " instances");
        }
        if (!it->second.passed()) {
          out.fail(id + ": " + std::to_string(it->second.failures.size()) + " counterexamples, first: "
                   + it->second.failures.front());
        }
      }
      // Same seed, same bytes.
      SampleConfig small = cfg;
      small.samples      = 50;
      auto const m       = load_monoid(o, files.front());
      if (to_json(check_first_isomorphism(m, small)) != to_json(check_first_isomorphism(m, small))) {
        out.fail("reports are not reproducible from the seed");
      }
      out.note(std::to_string(axiom_ids().size()) + " axioms x >= " + std::to_string(fewest)
               + " instances over " + std::to_string(files.size()) + " monoids, seed "
               + std::to_string(o.seed) + ", no counterexamples");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 7. Devissage
    ////////////////////////////////////////////////////////////////////////

    Outcome devissage(Options const& o) {
      Outcome     out;
      std::size_t monoids = 0, classes = 0;
      for (auto const& f : corpus_monoid_files(o)) {
        auto const a = load_monoid(o, f);
        if (!is_pc_monoid(*a).holds || !finite_length(*a)) {
          continue;
        }
        auto const r = devissage_check(a, kDevissageBound);
        ++monoids;
        classes += r.checked;
        if (!r.passed()) {
          out.fail(f + ": identity fails for " + std::to_string(r.failures.size()) + " classes, e.g. "
                   + r.failures.front());
        }
      }
      out.note(std::to_string(classes) + " classes over " + std::to_string(monoids)
               + " finite-length monoids, all differences in the relation lattice");
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // 8. Localization
    ////////////////////////////////////////////////////////////////////////

    Outcome localization(Options const& o, char const* file, Elem s) {
      Outcome    out;
      auto const a = load_monoid(o, file);
      auto const r = localization_check(a, s, kLocalizationMin, kLocalizationMax);
      auto const& st = r.final_stage();
      std::string const seq = st.quotient_group + " -> " + st.ambient_group + " -> "
                              + st.localized_group + " -> 0 at n=" + std::to_string(st.bound);
      if (!r.stabilized_bound) {
        out.fail("did not stabilize by n=" + std::to_string(kLocalizationMax) + ": " + seq);
      }
      if (!st.exact()) {
        std::string why;
        if (!st.j_defined) {
          why += " j^* leaves the pc classes;";
        }
        if (st.j_defined && !st.composite_zero) {
          why += " j^* i_* != 0;";
        }
        if (st.j_defined && !st.j_surjective) {
          why += " j^* not surjective;";
        }
        if (st.j_defined && !st.kernel_in_image) {
          why += " ker j^* not in im i_*;";
        }
        if (!r.ambient_pc) {
          why += " the ambient monoid is not pc;";
        }
        out.fail(seq + ":" + why);
      }
      out.note(seq + " exact");
      return out;
    }

    struct Entry {
      char const*                           id;
      char const*                           title;
      double                                limit;
      std::function<Outcome(Options const&)> run;
    };

    std::vector<Entry> const& entries() {
      static std::vector<Entry> const all{
          {"1", "pc N-sets on <= 6 vertices are exactly the rooted trees", kLimitPcTrees, pc_trees},
          {"2", "K'_0 = Z via reduced cardinality (F1, N/t^n, prototypes, free (Z/2)+)",
           kLimitKPrime, kprime_is_z},
          {"3", "G_0 of finite N-sets at bound 5 is free on [S0],[L1..L5]", 0, finite_nsets},
          {"4", "G_0 of N-sets with tails at bound 4 is free on [N],[L1..L4]", 0, tail_nsets},
          {"5", "Burnside rings of 1, Z/2, Z/3, Z/4, S3", kLimitBurnside, burnside_rings},
          {"6", "quasi-exact, CGW and ACGW axioms on random instances", kLimitAxioms, axiom_suites},
          {"7", "devissage identity within bound 5", 0, devissage},
          {"8a", "localization exactness for (prototype t^2 = t^3, t)", 0,
           [](Options const& o) { return localization(o, "proto2.monoid", 2); }},
          {"8b", "localization exactness for (N/t^2, t)", 0,
           [](Options const& o) { return localization(o, "ntr2.monoid", 2); }},
          // In N/t^3 ^ (Z/2)+ element 3 is t ^ 1: pairs (a, g) follow (1, 1)
          // in lexicographic order, so (1, g) = 2 and (t, 1) = 3.
          {"8c", "localization exactness for (N/t^3 ^ (Z/2)+, t ^ 1)", 0,
           [](Options const& o) { return localization(o, "ntr3_z2plus.monoid", 3); }},
          {"8d", "localization exactness for (N/t^3, 1)", 0,
           [](Options const& o) { return localization(o, "ntr3.monoid", 1); }},
      };
      return all;
    }

  }  // namespace

  std::vector<std::string> criterion_ids() {
    std::vector<std::string> ids;
    for (auto const& e : entries()) {
      ids.emplace_back(e.id);
    }
    return ids;
  }

  std::string criterion_title(std::string const& id) {
    for (auto const& e : entries()) {
      if (id == e.id) {
        return e.title;
      }
    }
    throw Error("unknown criterion '" + id + "'");
  }

  CriterionResult run_criterion(std::string const& id, Options const& opts) {
    for (auto const& e : entries()) {
      if (id != e.id) {
        continue;
      }
      CriterionResult r{e.id, e.title, false, "", 0};
      auto const      start = std::chrono::steady_clock::now();
      Outcome         out;
      try {
        out = e.run(opts);
      } catch (std::exception const& ex) {
        out.fail(std::string("exception: ") + ex.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (e.limit > 0 && r.seconds > e.limit) {
        out.fail("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(e.limit) + " s");
      }
      r.passed = out.passed;
      r.detail = out.detail;
      return r;
    }
    return CriterionResult{id, "unknown criterion", false, "no such criterion", 0};
  }

  std::vector<CriterionResult> run_all(Options const& opts) {
    std::vector<CriterionResult> out;
    for (auto const& id : criterion_ids()) {
      out.push_back(run_criterion(id, opts));
    }
    return out;
  }

  std::string format_line(CriterionResult const& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.id + "  " + r.title + "  (" + secs
           + " s)  " + r.detail;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles
  ////////////////////////////////////////////////////////////////////////

  CycleOracle cycle_oracle(std::vector<std::uint32_t> const& succ) {
    std::size_t const n = succ.size();
    CycleOracle       out{true, {}};
    // A point lies on a cycle iff iterating n times returns to it.
    std::vector<bool> counted(n, false);
    for (std::size_t x = 1; x < n; ++x) {
      std::size_t y = x;
      for (std::size_t step = 0; step < n; ++step) {
        y = succ[y];
      }
      if (y != 0) {
        out.rooted_tree = false;
      }
      if (counted[y] || y == 0) {
        continue;
      }
      std::size_t len = 0;
      std::size_t z   = y;
      do {
        counted[z] = true;
        z          = succ[z];
        ++len;
      } while (z != y);
      out.loop_lengths.push_back(len);
    }
    std::sort(out.loop_lengths.begin(), out.loop_lengths.end());
    return out;
  }

  std::size_t subgroup_class_count(std::vector<std::vector<std::size_t>> const& table) {
    std::size_t const                  n = table.size();
    std::vector<std::size_t>           inverse(n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        if (table[g][h] == 0) {
          inverse[g] = h;
        }
      }
    }
    auto closed = [&](std::uint64_t mask) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> table[a][b] & 1)) {
            return false;
          }
        }
      }
      return true;
    };
    std::set<std::uint64_t> seen;
    std::size_t             classes = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
      if (!closed(mask) || seen.count(mask)) {
        continue;
      }
      ++classes;
      for (std::size_t g = 0; g < n; ++g) {
        std::uint64_t conj = 0;
        for (std::size_t h = 0; h < n; ++h) {
          if (mask >> h & 1) {
            conj |= std::uint64_t{1} << table[table[g][h]][inverse[g]];
          }
        }
        seen.insert(conj);
      }
    }
    return classes;
  }

}  // namespace kprime::verify
