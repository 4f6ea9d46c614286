#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kprime/axioms.hpp"
#include "kprime/errors.hpp"
#include "kprime/io.hpp"
#include "kprime/ktheory.hpp"
#include "kprime/verify.hpp"

#ifndef KPRIME_CORPUS_DIR
#define KPRIME_CORPUS_DIR "corpus"
#endif

namespace kprime::cli {

  namespace {

    using json = nlohmann::ordered_json;

    struct Flags {
      std::string              path;
      std::string              monoid_path;
      std::string              flavor;
      std::size_t              bound = 4;
      std::size_t              n_min = 2;
      std::size_t              n_max = 6;
      std::uint64_t            seed  = kDefaultSeed;
      std::size_t              samples = 1000;
      std::size_t              instances = 10000;
      std::size_t              s = 0;
      bool                     json = false;
      std::string              out_path;
      std::string              corpus = KPRIME_CORPUS_DIR;
      std::vector<std::string> criteria;
    };

    struct Output {
      int         code = kOk;
      std::string text;
    };

    json jint(Integer const& v) {
      if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
      }
      return to_string(v);
    }

    json jints(std::vector<Integer> const& v) {
      json a = json::array();
      for (auto const& x : v) {
        a.push_back(jint(x));
      }
      return a;
    }

    std::string ints(std::vector<Integer> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + to_string(v[i]);
      }
      return s + ")";
    }

    std::string torsion_text(std::vector<Integer> const& t) {
      if (t.empty()) {
        return "none";
      }
      std::string s;
      for (auto const& d : t) {
        s += (s.empty() ? "Z/" : " + Z/") + to_string(d);
      }
      return s;
    }

    std::string yes(bool b) {
      return b ? "true" : "false";
    }

    std::string witness_text(Decision const& d) {
      if (!d.witness) {
        return "";
      }
      auto const& w = *d.witness;
      return " (witness a=" + std::to_string(w[0]) + ", b=" + std::to_string(w[1])
             + ", c=" + std::to_string(w[2]) + ")";
    }

    json witness_json(Decision const& d) {
      if (!d.witness) {
        return nullptr;
      }
      return json::array({(*d.witness)[0], (*d.witness)[1], (*d.witness)[2]});
    }

    MonoidPtr load_monoid(std::string const& path) {
      return share(parse_monoid(read_file(path)));
    }

    MonoidPtr require_monoid(Flags const& f, char const* what) {
      std::string const& p = f.path.empty() ? f.monoid_path : f.path;
      if (p.empty()) {
        throw Error(std::string(what) + " needs a monoid file");
      }
      return load_monoid(p);
    }

    bool is_nset_flavor(Flavor fl) {
      return fl == Flavor::nset || fl == Flavor::fgnset;
    }

    Flavor flavor_or(Flags const& f, Flavor fallback) {
      if (f.flavor.empty()) {
        return fallback;
      }
      auto const fl = parse_flavor(f.flavor);
      if (!fl) {
        throw Error("unknown flavor '" + f.flavor + "' (all, pc, free, nset, fgnset)");
      }
      return *fl;
    }

    ////////////////////////////////////////////////////////////////////////

    Output cmd_validate(Flags const& f) {
      std::string const text = read_file(f.path);
      FileKind const    kind = detect_kind(text);
      json              j;
      j["file"] = f.path;
      j["kind"] = to_string(kind);
      switch (kind) {
        case FileKind::monoid: {
          auto const m  = parse_monoid(text);
          auto const pc = is_pc_monoid(m);
          j["name"]        = m.name();
          j["size"]        = m.size();
          j["commutative"] = m.is_commutative();
          j["pc"]          = pc.holds;
          j["units"]       = units(m).group.size();
          if (pc.holds) {
            auto const len = finite_length(m);
            j["length"]    = len ? json(*len) : json(nullptr);
          } else {
            j["length"] = nullptr;
          }
          break;
        }
        case FileKind::group: {
          auto const g       = parse_group(text);
          j["name"]          = g.name();
          j["order"]         = g.size();
          j["abelian"]       = g.is_abelian();
          j["subgroup_classes"] = subgroup_class_representatives(g).size();
          break;
        }
        case FileKind::aset: {
          if (f.monoid_path.empty()) {
            throw Error("validating an A-set needs --monoid");
          }
          auto const x = parse_aset(text, load_monoid(f.monoid_path));
          j["name"]    = x.name();
          j["monoid"]  = x.monoid()->name();
          j["size"]    = x.size();
          j["rank"]    = x.rank();
          j["pc"]      = is_pc_aset(x).holds;
          j["free"]    = is_free(x);
          break;
        }
        case FileKind::nset: {
          auto const x   = parse_nset(text);
          j["name"]      = x.name();
          j["core_rank"] = x.core_rank();
          j["finite"]    = x.is_finite();
          if (x.is_finite()) {
            auto const c      = classify_nset(FunctionalNSet::make(x.name(), x.succ_map()));
            j["rooted_tree"]  = c.rooted_tree;
            j["loops"]        = c.loop_lengths;
          }
          break;
        }
      }
      if (f.json) {
        return {kOk, j.dump(2) + "\n"};
      }
      std::string s;
      for (auto const& [k, v] : j.items()) {
        s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
      return {kOk, s};
    }

    Output cmd_pc(Flags const& f) {
      std::string const text = read_file(f.path);
      FileKind const    kind = detect_kind(text);
      Decision          d;
      std::string       name;
      switch (kind) {
        case FileKind::monoid: {
          auto const m = parse_monoid(text);
          name         = m.name();
          d            = is_pc_monoid(m);
          break;
        }
        case FileKind::aset: {
          if (f.monoid_path.empty()) {
            throw Error("pc of an A-set needs --monoid");
          }
          auto const x = parse_aset(text, load_monoid(f.monoid_path));
          name         = x.name();
          d            = is_pc_aset(x);
          break;
        }
        case FileKind::nset: {
          auto const x = parse_nset(text);
          if (!x.is_finite()) {
            throw Error("pc is decided for finite N-sets only");
          }
          name = x.name();
          d    = is_pc_aset(to_truncated_aset(FunctionalNSet::make(x.name(), x.succ_map())));
          break;
        }
        case FileKind::group:
          throw Error("pc applies to monoids, A-sets and N-sets; build G+ as a monoid file");
      }
      if (f.json) {
        json j{{"name", name}, {"pc", d.holds}, {"witness", witness_json(d)}};
        return {kOk, j.dump(2) + "\n"};
      }
      return {kOk, name + ": pc " + yes(d.holds) + witness_text(d) + "\n"};
    }

    Output cmd_enumerate(Flags const& f) {
      Flavor const fl = flavor_or(f, Flavor::all);
      json         classes = json::array();
      std::map<std::size_t, std::size_t> by_rank;
      std::string                        listing;
      std::string                        over;
      if (is_nset_flavor(fl)) {
        over = "N";
        auto const sets = enumerate_fgnsets(f.bound, fl == Flavor::fgnset);
        for (auto const& x : sets) {
          ++by_rank[x.core_rank()];
          classes.push_back(json::parse(nset_to_json(x)));
          listing += write_nset(x);
        }
      } else {
        auto const   a = require_monoid(f, "enumerate");
        ASetFlavor const af = fl == Flavor::pc ? ASetFlavor::pc : fl == Flavor::free ? ASetFlavor::free : ASetFlavor::all;
        over = a->name();
        for (auto const& x : enumerate_asets(a, f.bound, af)) {
          ++by_rank[x.rank()];
          classes.push_back(json::parse(aset_to_json(x)));
          listing += write_aset(x);
        }
      }
      if (f.json) {
        json j{{"monoid", over}, {"flavor", to_string(fl)}, {"bound", f.bound},
               {"count", classes.size()}, {"classes", classes}};
        return {kOk, j.dump(2) + "\n"};
      }
      std::string s = "monoid: " + over + "\nflavor: " + to_string(fl) + "\nbound: "
                      + std::to_string(f.bound) + "\nclasses: " + std::to_string(classes.size()) + "\n";
      for (auto const& [r, c] : by_rank) {
        s += "  rank " + std::to_string(r) + ": " + std::to_string(c) + "\n";
      }
      return {kOk, s + "\n" + listing};
    }

    Output cmd_k0(Flags const& f, Flavor fallback) {
      Flavor const   fl = flavor_or(f, fallback);
      K0Presentation p;
      MonoidPtr      a;
      if (is_nset_flavor(fl)) {
        p = build_nset_presentation(f.bound, fl == Flavor::fgnset);
      } else {
        a = require_monoid(f, "k0");
        p = build_presentation(a, fl, f.bound);
      }
      auto const s          = smith(p);
      bool const additivity = verify_smith(s.group) && verify_additivity(p, s);
      json       devissage  = nullptr;
      if (a && fl == Flavor::pc && is_pc_monoid(*a).holds && finite_length(*a)) {
        devissage = devissage_check(a, f.bound).passed();
      }
      std::string const monoid = a ? a->name() : "N";

      if (f.json) {
        json classmap = json::object();
        for (std::size_t i = 0; i < p.size(); ++i) {
          classmap[p.generators[i]] = jints(s.classes.classes[i]);
        }
        json j{{"monoid", monoid},
               {"flavor", to_string(fl)},
               {"bound", f.bound},
               {"generators", p.generators},
               {"relations", p.relations.size()},
               {"rank", s.group.free_rank},
               {"torsion", jints(s.group.torsion)},
               {"classmap", classmap},
               {"checks", {{"devissage", devissage}, {"exactness", nullptr}, {"additivity", additivity}}}};
        return {kOk, j.dump(2) + "\n"};
      }
      std::string out = "monoid: " + monoid + "\nflavor: " + to_string(fl) + "\nbound: "
                        + std::to_string(f.bound) + "\ngenerators: " + std::to_string(p.size())
                        + "\nrelations: " + std::to_string(p.relations.size()) + "\ngroup: "
                        + s.group.describe() + "\nrank: " + std::to_string(s.group.free_rank)
                        + "\ntorsion: " + torsion_text(s.group.torsion) + "\nadditivity: "
                        + (additivity ? "ok" : "FAILED") + "\n";
      if (!devissage.is_null()) {
        out += std::string("devissage: ") + (devissage.get<bool>() ? "ok" : "FAILED") + "\n";
      }
      out += "classes:\n";
      for (std::size_t i = 0; i < p.size(); ++i) {
        out += "  " + p.generators[i] + "  " + ints(s.classes.classes[i]) + "\n";
      }
      return {kOk, out};
    }

    Output cmd_burnside(Flags const& f) {
      auto const g = parse_group(read_file(f.path));
      auto const r = burnside(g);
      if (f.json) {
        json j{{"group", r.group},
               {"order", r.order},
               {"rank", r.free_rank},
               {"torsion", jints(r.torsion)},
               {"subgroups", r.classes},
               {"transitive_basis", r.transitive_basis},
               {"marks", r.marks},
               {"product", r.product},
               {"marks_multiplicative", r.marks_multiplicative}};
        return {kOk, j.dump(2) + "\n"};
      }
      std::string s = "group: " + r.group + "\norder: " + std::to_string(r.order) + "\nrank: "
                      + std::to_string(r.free_rank) + "\ntorsion: " + torsion_text(r.torsion)
                      + "\ntransitive basis: " + yes(r.transitive_basis)
                      + "\nmarks multiplicative: " + yes(r.marks_multiplicative) + "\nsubgroups:\n";
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        s += "  H" + std::to_string(i) + " = {";
        for (std::size_t k = 0; k < r.classes[i].size(); ++k) {
          s += (k ? "," : "") + std::to_string(r.classes[i][k]);
        }
        s += "}\n";
      }
      s += "marks:\n";
      for (auto const& row : r.marks) {
        s += " ";
        for (auto v : row) {
          s += " " + std::to_string(v);
        }
        s += "\n";
      }
      s += "products:\n";
      for (std::size_t i = 0; i < r.product.size(); ++i) {
        for (std::size_t j = i; j < r.product.size(); ++j) {
          std::string terms;
          for (std::size_t k = 0; k < r.product[i][j].size(); ++k) {
            auto const c = r.product[i][j][k];
            if (c != 0) {
              terms += (terms.empty() ? "" : " + ") + std::to_string(c) + "[G/H" + std::to_string(k) + "]";
            }
          }
          s += "  [G/H" + std::to_string(i) + "][G/H" + std::to_string(j) + "] = "
               + (terms.empty() ? "0" : terms) + "\n";
        }
      }
      return {kOk, s};
    }

    Output cmd_devissage(Flags const& f) {
      auto const a = require_monoid(f, "devissage");
      auto const r = devissage_check(a, f.bound);
      int const  code = r.passed() ? kOk : kCheckFailed;
      if (f.json) {
        json j{{"monoid", r.monoid}, {"bound", r.bound},       {"length", r.length},
               {"checked", r.checked}, {"failures", r.failures}, {"passed", r.passed()}};
        return {code, j.dump(2) + "\n"};
      }
      std::string s = "monoid: " + r.monoid + "\nbound: " + std::to_string(r.bound) + "\nlength: "
                      + std::to_string(r.length) + "\nchecked: " + std::to_string(r.checked)
                      + "\nfailures: " + std::to_string(r.failures.size()) + "\n";
      for (auto const& x : r.failures) {
        s += "  " + x + "\n";
      }
      return {code, s};
    }

    Output cmd_localize(Flags const& f) {
      auto const a = require_monoid(f, "localize");
      if (f.s >= a->size()) {
        throw Error("--s " + std::to_string(f.s) + " is not an element of " + a->name());
      }
      auto const r    = localization_check(a, static_cast<Elem>(f.s), f.n_min, f.n_max);
      int const  code = r.exact() ? kOk : kCheckFailed;
      if (f.json) {
        json stages = json::array();
        for (auto const& st : r.stages) {
          stages.push_back({{"bound", st.bound},
                            {"quotient", st.quotient_group},
                            {"ambient", st.ambient_group},
                            {"localized", st.localized_group},
                            {"j_defined", st.j_defined},
                            {"composite_zero", st.composite_zero},
                            {"j_surjective", st.j_surjective},
                            {"kernel_in_image", st.kernel_in_image}});
        }
        json j{{"monoid", r.monoid},
               {"s", r.s},
               {"ambient_pc", r.ambient_pc},
               {"quotient_monoid", r.quotient_monoid},
               {"localized_monoid", r.localized_monoid},
               {"stabilized_bound", r.stabilized_bound ? json(*r.stabilized_bound) : json(nullptr)},
               {"stages", stages},
               {"checks", {{"exactness", r.exact()}}}};
        return {code, j.dump(2) + "\n"};
      }
      std::string s = "monoid: " + r.monoid + "\ns: " + std::to_string(r.s) + "\nambient pc: "
                      + yes(r.ambient_pc) + "\nA/sA: " + r.quotient_monoid + "\nA[1/s]: "
                      + r.localized_monoid + "\n";
      for (auto const& st : r.stages) {
        s += "  n=" + std::to_string(st.bound) + "  " + st.quotient_group + " -> " + st.ambient_group
             + " -> " + st.localized_group + " -> 0  composite zero " + yes(st.composite_zero)
             + ", j surjective " + yes(st.j_surjective) + ", ker in im " + yes(st.kernel_in_image)
             + (st.j_defined ? "" : ", j leaves pc") + "\n";
      }
      s += "stabilized: "
           + (r.stabilized_bound ? "n=" + std::to_string(*r.stabilized_bound) : std::string("no"))
           + "\nexact: " + yes(r.exact()) + "\n";
      return {code, s};
    }

    Output cmd_acgw(Flags const& f) {
      auto const   a = require_monoid(f, "acgw");
      SampleConfig cfg;
      cfg.samples  = f.samples;
      cfg.seed     = f.seed;
      auto const reports = check_all_axioms(a, cfg);
      bool const ok = std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.passed(); });
      int const code = ok ? kOk : kCheckFailed;
      if (f.json) {
        json j = json::array();
        for (auto const& r : reports) {
          j.push_back(json::parse(to_json(r)));
        }
        return {code, j.dump(2) + "\n"};
      }
      std::string s = "monoid: " + a->name() + "\nseed: " + std::to_string(f.seed) + "\n";
      for (auto const& r : reports) {
        s += "  " + r.axiom + "  tested " + std::to_string(r.tested) + "  failures "
             + std::to_string(r.failures.size()) + "\n";
        for (auto const& x : r.failures) {
          s += x + "\n";
        }
      }
      return {code, s};
    }

    // Every manifest entry must load; a broken corpus is an input error.
    void check_corpus(std::string const& dir) {
      auto const manifest = json::parse(read_file((std::filesystem::path(dir) / "manifest.json").string()));
      for (auto const& e : manifest.at("entries")) {
        std::string const file = e.at("file").get<std::string>();
        std::string const path = (std::filesystem::path(dir) / file).string();
        std::string const kind = e.at("kind").get<std::string>();
        try {
          std::string const text = read_file(path);
          if (kind == "monoid") {
            parse_monoid(text);
          } else if (kind == "group") {
            parse_group(text);
          } else if (kind == "nset") {
            parse_nset(text);
          } else if (kind == "aset") {
            auto const m = e.at("monoid").get<std::string>();
            parse_aset(text, load_monoid((std::filesystem::path(dir) / m).string()));
          }
        } catch (Error const& ex) {
          throw Error(file + ": " + ex.what());
        }
      }
    }

    Output cmd_verify(Flags const& f) {
      check_corpus(f.corpus);
      verify::Options o;
      o.corpus_dir      = f.corpus;
      o.seed            = f.seed;
      o.axiom_instances = f.instances;
      auto const ids    = f.criteria.empty() ? verify::criterion_ids() : f.criteria;
      std::vector<verify::CriterionResult> results;
      for (auto const& id : ids) {
        verify::criterion_title(id);  // rejects unknown ids up front
      }
      for (auto const& id : ids) {
        results.push_back(verify::run_criterion(id, o));
      }
      auto const passed = std::count_if(results.begin(), results.end(), [](auto const& r) { return r.passed; });
      int const  code   = passed == static_cast<std::ptrdiff_t>(results.size()) ? kOk : kCheckFailed;
      if (f.json) {
        json j = json::array();
        for (auto const& r : results) {
          j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                       {"seconds", r.seconds}});
        }
        return {code, j.dump(2) + "\n"};
      }
      std::string s;
      for (auto const& r : results) {
        s += verify::format_line(r) + "\n";
      }
      s += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
      return {code, s};
    }

  }  // namespace

  std::uint64_t default_seed() {
    if (char const* env = std::getenv("KPRIME_SEED")) {
      char*                    end = nullptr;
      unsigned long long const v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') {
        return v;
      }
    }
    return kDefaultSeed;
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Flags f;
    f.seed = default_seed();

    CLI::App app{"Finite pointed monoids, A-sets and truncated K-groups"};
    app.name("kprime");
    app.require_subcommand(1);

    auto add_json = [&](CLI::App* c) {
      c->add_flag("--json", f.json, "Emit JSON");
      c->add_option("--out", f.out_path, "Write output to a file");
    };
    auto add_bound = [&](CLI::App* c) {
      c->add_option("--bound,-n", f.bound, "Non-base points per class")->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "Parse a corpus file and report its properties");
    validate->add_option("path", f.path)->required();
    validate->add_option("--monoid", f.monoid_path, "Monoid file for an A-set");
    add_json(validate);

    auto* pc = app.add_subcommand("pc", "Decide partial cancellativity with a witness");
    pc->add_option("path", f.path)->required();
    pc->add_option("--monoid", f.monoid_path, "Monoid file for an A-set");
    add_json(pc);

    auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes up to a bound");
    enumerate->add_option("path", f.path, "Monoid file (omit for nset/fgnset)");
    enumerate->add_option("--flavor", f.flavor, "all, pc, free, nset or fgnset");
    add_bound(enumerate);
    add_json(enumerate);

    auto* k0 = app.add_subcommand("k0", "Truncated K'_0 / K_0 / G_0 (default flavor pc)");
    auto* g0 = app.add_subcommand("g0", "Truncated G_0 (default flavor all)");
    for (auto* c : {k0, g0}) {
      c->add_option("path", f.path, "Monoid file (omit for nset/fgnset)");
      c->add_option("--flavor", f.flavor, "all, pc, free, nset or fgnset");
      add_bound(c);
      add_json(c);
    }

    auto* burnside_cmd = app.add_subcommand("burnside", "Burnside ring of a finite group");
    burnside_cmd->add_option("path", f.path)->required();
    add_json(burnside_cmd);

    auto* devissage = app.add_subcommand("devissage", "Check class(X) = sum of graded pieces");
    devissage->add_option("path", f.path)->required();
    add_bound(devissage);
    add_json(devissage);

    auto* localize = app.add_subcommand("localize", "Exactness of K'_0(A/sA) -> K'_0(A) -> K'_0(A[1/s]) -> 0");
    localize->add_option("path", f.path)->required();
    localize->add_option("--s", f.s, "Element to invert")->required();
    localize->add_option("--n-min", f.n_min, "First bound")->capture_default_str();
    localize->add_option("--bound,-n", f.n_max, "Last bound")->capture_default_str();
    add_json(localize);

    auto* acgw = app.add_subcommand("acgw", "Sample the quasi-exact, CGW and ACGW axioms");
    acgw->add_option("path", f.path)->required();
    acgw->add_option("--samples", f.samples, "Instances per axiom")->capture_default_str();
    acgw->add_option("--seed", f.seed, "Seed (default: KPRIME_SEED or built-in)");
    add_json(acgw);

    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria over the corpus");
    verify_cmd->add_option("--corpus", f.corpus, "Corpus directory")->capture_default_str();
    verify_cmd->add_option("--criterion", f.criteria, "Run only these criteria (repeatable)");
    verify_cmd->add_option("--samples", f.instances, "Axiom instances per axiom over the corpus")
        ->capture_default_str();
    verify_cmd->add_option("--seed", f.seed, "Seed (default: KPRIME_SEED or built-in)");
    add_json(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const rc = app.exit(e, out, err);
      return rc == 0 ? kOk : kInputError;
    }

    Output result;
    try {
      if (*validate) {
        result = cmd_validate(f);
      } else if (*pc) {
        result = cmd_pc(f);
      } else if (*enumerate) {
        result = cmd_enumerate(f);
      } else if (*k0) {
        result = cmd_k0(f, Flavor::pc);
      } else if (*g0) {
        result = cmd_k0(f, Flavor::all);
      } else if (*burnside_cmd) {
        result = cmd_burnside(f);
      } else if (*devissage) {
        result = cmd_devissage(f);
      } else if (*localize) {
        result = cmd_localize(f);
      } else if (*acgw) {
        result = cmd_acgw(f);
      } else if (*verify_cmd) {
        result = cmd_verify(f);
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }

    if (f.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(f.out_path, std::ios::binary);
      if (!(file << result.text)) {
        err << "error: cannot write " << f.out_path << "\n";
        return kInputError;
      }
    }
    return result.code;
  }

}  // namespace kprime::cli
