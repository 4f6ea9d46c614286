#include "kprime/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kprime/builders.hpp"
#include "kprime/errors.hpp"

namespace kprime {

  namespace {

    Integer floor_mod(Integer const& a, Integer const& m) {
      Integer r = a % m;
      if (r < 0) {
        r += m;
      }
      return r;
    }

    ASetFlavor aset_flavor(Flavor f) {
      switch (f) {
        case Flavor::all:
          return ASetFlavor::all;
        case Flavor::pc:
          return ASetFlavor::pc;
        case Flavor::free:
          return ASetFlavor::free;
        default:
          throw FlavorUnavailable(std::string("flavor ") + to_string(f)
                                  + " is not an A-set flavor");
      }
    }

    // Accumulates [X] - [Y] - [Z] into the deduplicated relation set.
    void add_relation(std::set<Relation>& out, std::size_t x, std::size_t y, std::size_t z) {
      std::map<std::size_t, std::int64_t> row;
      row[x] += 1;
      row[y] -= 1;
      row[z] -= 1;
      Relation r;
      for (auto const& [j, c] : row) {
        if (c != 0) {
          r.emplace_back(j, c);
        }
      }
      if (!r.empty()) {
        out.insert(std::move(r));
      }
    }

    std::vector<Integer> dense(Relation const& r, std::size_t n) {
      std::vector<Integer> v(n);
      for (auto const& [j, c] : r) {
        v[j] += c;
      }
      return v;
    }

    std::vector<Integer> unit_vector(std::size_t n, std::size_t i) {
      std::vector<Integer> v(n);
      v[i] = 1;
      return v;
    }

    // The target's torsion relations d_i e_i as rows.
    std::vector<std::vector<Integer>> torsion_rows(AbGroup const& g) {
      std::vector<std::vector<Integer>> rows;
      for (std::size_t i = 0; i < g.coords(); ++i) {
        if (g.moduli[i] != 0) {
          auto v = unit_vector(g.coords(), i);
          v[i]   = g.moduli[i];
          rows.push_back(std::move(v));
        }
      }
      return rows;
    }

    Lattice image_lattice(Hom const& h) {
      Lattice    l(h.target->coords());
      auto const m = h.coordinate_matrix();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        l.insert(m.row(i));
      }
      for (auto& r : torsion_rows(*h.target)) {
        l.insert(std::move(r));
      }
      return l;
    }

    bool is_injective_hom(Hom const& h) {
      for (auto const& v : h.kernel()) {
        if (!h.source->is_zero(v)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  char const* to_string(Flavor f) {
    switch (f) {
      case Flavor::all:
        return "all";
      case Flavor::pc:
        return "pc";
      case Flavor::free:
        return "free";
      case Flavor::nset:
        return "nset";
      case Flavor::fgnset:
        return "fgnset";
    }
    return "?";
  }

  std::optional<Flavor> parse_flavor(std::string const& s) {
    for (auto f : {Flavor::all, Flavor::pc, Flavor::free, Flavor::nset, Flavor::fgnset}) {
      if (s == to_string(f)) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> K0Presentation::find(std::string const& key) const {
    auto const it = index.find(key);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  K0Presentation build_presentation(MonoidPtr const& a, Flavor flavor, std::size_t bound) {
    if (flavor == Flavor::nset || flavor == Flavor::fgnset) {
      throw FlavorUnavailable(std::string("flavor ") + to_string(flavor)
                              + " describes N-sets and takes no monoid");
    }
    K0Presentation p;
    p.monoid = a->name();
    p.flavor = flavor;
    p.bound  = bound;
    p.asets  = enumerate_asets(a, bound, aset_flavor(flavor));
    for (std::size_t i = 0; i < p.asets.size(); ++i) {
      auto const& x = p.asets[i];
      p.generators.push_back(x.name());
      p.keys.push_back(canonical_key(x));
      p.ranks.push_back(x.rank());
      p.index.emplace(p.keys.back(), i);
    }
    std::set<Relation> rels;
    for (std::size_t i = 0; i < p.asets.size(); ++i) {
      auto const& x = p.asets[i];
      for (auto const& y : all_subsets(x)) {
        auto const yi = p.find(canonical_key(restrict_to(x, y).set));
        auto const zi = p.find(canonical_key(quotient_aset(x, y).set));
        if (yi && zi) {
          add_relation(rels, i, *yi, *zi);
        }
      }
    }
    p.relations.assign(rels.begin(), rels.end());
    return p;
  }

  K0Presentation build_nset_presentation(std::size_t bound, bool tails) {
    K0Presentation p;
    p.monoid = "N";
    p.flavor = tails ? Flavor::fgnset : Flavor::nset;
    p.bound  = bound;
    p.nsets  = enumerate_fgnsets(bound, tails);
    for (std::size_t i = 0; i < p.nsets.size(); ++i) {
      auto const& x = p.nsets[i];
      p.generators.push_back(x.name());
      p.keys.push_back(fgn_key(x));
      p.ranks.push_back(x.core_rank());
      p.index.emplace(p.keys.back(), i);
    }
    std::set<Relation> rels;
    for (std::size_t i = 0; i < p.nsets.size(); ++i) {
      auto const& x = p.nsets[i];
      for (auto const& y : fgn_subsets(x, tails ? bound : 0)) {
        auto const yi = p.find(fgn_key(fgn_subobject(x, y)));
        auto const zi = p.find(fgn_key(fgn_quotient(x, y)));
        if (yi && zi) {
          add_relation(rels, i, *yi, *zi);
        }
      }
    }
    p.relations.assign(rels.begin(), rels.end());
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith coordinates
  ////////////////////////////////////////////////////////////////////////

  std::vector<Integer> AbGroup::reduce(std::vector<Integer> c) const {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (moduli[i] != 0) {
        c[i] = floor_mod(c[i], moduli[i]);
      }
    }
    return c;
  }

  bool AbGroup::is_zero(std::vector<Integer> const& c) const {
    auto const r = reduce(c);
    return std::all_of(r.begin(), r.end(), [](Integer const& v) { return v == 0; });
  }

  std::vector<Integer> AbGroup::coordinates(std::vector<Integer> const& combination) const {
    if (combination.size() != generators) {
      throw std::invalid_argument("combination has the wrong length");
    }
    std::vector<Integer> out(coords());
    for (std::size_t i = 0; i < coords(); ++i) {
      for (std::size_t j = 0; j < generators; ++j) {
        if (combination[j] != 0) {
          out[i] += combination[j] * snf.v.at(j, coord_cols[i]);
        }
      }
    }
    return reduce(std::move(out));
  }

  std::vector<Integer> AbGroup::lift(std::size_t coord) const {
    return snf.v_inv.row(coord_cols.at(coord));
  }

  std::string AbGroup::describe() const {
    std::ostringstream os;
    bool               first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) {
        os << "^" << free_rank;
      }
      first = false;
    }
    for (auto const& d : torsion) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    return first ? "0" : os.str();
  }

  std::vector<Integer> ClassMap::of(Relation const& combination, AbGroup const& g) const {
    std::vector<Integer> out(g.coords());
    for (auto const& [j, c] : combination) {
      for (std::size_t i = 0; i < g.coords(); ++i) {
        out[i] += c * classes.at(j)[i];
      }
    }
    return g.reduce(std::move(out));
  }

  SmithResult smith(K0Presentation const& p) {
    std::size_t const n = p.size();
    SmithResult       out;
    AbGroup&          g = out.group;
    g.generators        = n;
    g.relations         = Lattice(n);
    for (auto const& r : p.relations) {
      g.relations.insert(dense(r, n));
    }
    g.hermite         = g.relations.basis();
    g.snf             = smith_normal_form(g.hermite);
    std::size_t const h = g.hermite.rows();
    for (std::size_t col = 0; col < n; ++col) {
      Integer const d = col < h ? g.snf.diagonal[col] : Integer(0);
      if (d == 1) {
        continue;
      }
      g.coord_cols.push_back(col);
      g.moduli.push_back(d);
      if (d == 0) {
        ++g.free_rank;
      } else {
        g.torsion.push_back(d);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      out.classes.classes.push_back(g.coordinates(unit_vector(n, j)));
    }
    return out;
  }

  bool verify_smith(AbGroup const& g) {
    auto const& s = g.snf;
    if (!(s.u * s.u_inv).is_identity() || !(s.v * s.v_inv).is_identity()) {
      return false;
    }
    auto const d = s.u * g.hermite * s.v;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        Integer const expect = i == j ? s.diagonal[i] : Integer(0);
        if (d.at(i, j) != expect) {
          return false;
        }
      }
    }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      Integer const& a = s.diagonal[i];
      Integer const& b = s.diagonal[i + 1];
      if (a < 0 || (a == 0 && b != 0) || (a != 0 && b % a != 0)) {
        return false;
      }
    }
    return true;
  }

  bool verify_additivity(K0Presentation const& p, SmithResult const& s) {
    return std::all_of(p.relations.begin(), p.relations.end(), [&](Relation const& r) {
      return s.group.is_zero(s.classes.of(r, s.group));
    });
  }

  bool reduced_cardinality_is_additive(K0Presentation const& p) {
    return std::all_of(p.relations.begin(), p.relations.end(), [&](Relation const& r) {
      std::int64_t total = 0;
      for (auto const& [j, c] : r) {
        total += c * static_cast<std::int64_t>(p.ranks[j]);
      }
      return total == 0;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  IntMatrix Hom::coordinate_matrix() const {
    std::size_t const c1 = source->coords();
    std::size_t const c2 = target->coords();
    IntMatrix         m(c1, c2);
    for (std::size_t i = 0; i < c1; ++i) {
      auto const           lift = source->lift(i);
      std::vector<Integer> row(c2);
      for (std::size_t j = 0; j < lift.size(); ++j) {
        if (lift[j] == 0) {
          continue;
        }
        for (std::size_t k = 0; k < c2; ++k) {
          row[k] += lift[j] * images.at(j)[k];
        }
      }
      row = target->reduce(std::move(row));
      for (std::size_t k = 0; k < c2; ++k) {
        m.at(i, k) = row[k];
      }
    }
    return m;
  }

  bool Hom::is_zero() const {
    return std::all_of(images.begin(), images.end(),
                       [&](std::vector<Integer> const& v) { return target->is_zero(v); });
  }

  bool Hom::is_surjective() const {
    auto const l = image_lattice(*this);
    for (std::size_t k = 0; k < target->coords(); ++k) {
      if (!l.contains(unit_vector(target->coords(), k))) {
        return false;
      }
    }
    return true;
  }

  bool Hom::is_injective() const {
    return is_injective_hom(*this);
  }

  std::vector<std::vector<Integer>> Hom::kernel() const {
    std::size_t const c1   = source->coords();
    std::size_t const c2   = target->coords();
    auto const        m    = coordinate_matrix();
    auto const        tors = torsion_rows(*target);
    IntMatrix         stacked(c1 + tors.size(), c2);
    for (std::size_t i = 0; i < c1; ++i) {
      for (std::size_t k = 0; k < c2; ++k) {
        stacked.at(i, k) = m.at(i, k);
      }
    }
    for (std::size_t t = 0; t < tors.size(); ++t) {
      for (std::size_t k = 0; k < c2; ++k) {
        stacked.at(c1 + t, k) = tors[t][k];
      }
    }
    std::vector<std::vector<Integer>> out;
    for (auto const& u : left_kernel(stacked)) {
      std::vector<Integer> v(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(c1));
      v = source->reduce(std::move(v));
      if (!source->is_zero(v)) {
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  bool kernel_in_image(Hom const& outer, Hom const& inner) {
    if (outer.source != inner.target) {
      throw std::invalid_argument("maps do not meet in a common group");
    }
    auto const l = image_lattice(inner);
    for (auto const& v : outer.kernel()) {
      if (!l.contains(v)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Scans
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<ScanRow> scan(std::size_t n_min, std::size_t n_max,
                              std::function<K0Presentation(std::size_t)> const& build) {
      std::vector<ScanRow>          rows;
      std::optional<K0Presentation> prev_p;
      std::optional<SmithResult>    prev_s;
      for (std::size_t b = n_min; b <= n_max; ++b) {
        auto    p = build(b);
        auto    s = smith(p);
        ScanRow row{b, p.size(), p.relations.size(), s.group.free_rank, s.group.torsion, {}};
        if (prev_p) {
          Hom h{&prev_s->group, &s.group, {}};
          for (auto const& key : prev_p->keys) {
            h.images.push_back(s.classes.classes.at(p.find(key).value()));
          }
          row.iso_from_previous = h.is_surjective() && h.is_injective();
        }
        rows.push_back(std::move(row));
        prev_p = std::move(p);
        prev_s = std::move(s);
      }
      return rows;
    }

  }  // namespace

  std::vector<ScanRow> stabilization_scan(MonoidPtr const& a, Flavor flavor, std::size_t n_min,
                                          std::size_t n_max) {
    return scan(n_min, n_max, [&](std::size_t b) { return build_presentation(a, flavor, b); });
  }

  std::vector<ScanRow> nset_stabilization_scan(bool tails, std::size_t n_min, std::size_t n_max) {
    return scan(n_min, n_max, [&](std::size_t b) { return build_nset_presentation(b, tails); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Devissage
  ////////////////////////////////////////////////////////////////////////

  DevissageReport devissage_check(MonoidPtr const& a, std::size_t bound) {
    auto const m      = maximal_ideal(*a);  // throws NotPc
    auto const length = finite_length(*a);
    if (!length) {
      throw NotFiniteLength(a->name() + " has a maximal ideal that is not nilpotent");
    }
    // powers[i] = m^i for i = 1..length.
    std::vector<Ideal> powers{m};
    while (powers.size() < *length) {
      powers.push_back(ideal_product(*a, powers.back(), m));
    }
    auto const      p = build_presentation(a, Flavor::pc, bound);
    auto const      s = smith(p);
    DevissageReport report{a->name(), bound, *length, 0, {}};
    for (std::size_t x = 0; x < p.size(); ++x) {
      auto const&          set = p.asets[x];
      // F_0 = X, F_i = m^i X; F_length = {base}.
      std::vector<ASubset> filtration{ASubset::from_mask_unchecked(std::vector<bool>(set.size(), true))};
      for (auto const& ideal : powers) {
        filtration.push_back(ideal_times(set, ideal));
      }
      std::vector<Integer> diff(p.size());
      diff[x] += 1;
      bool ok = filtration.back().size() == 1;
      for (std::size_t i = 0; ok && i + 1 < filtration.size(); ++i) {
        auto const sub   = restrict_to(set, filtration[i]);
        auto const lower = preimage(sub.inclusion, filtration[i + 1]);
        auto const gr    = quotient_aset(sub.set, lower).set;
        for (auto c : m.members()) {
          for (Elem q = 0; q < gr.size() && ok; ++q) {
            ok = gr.act(c, q) == kBase;
          }
        }
        auto const gi = p.find(canonical_key(gr));
        ok            = ok && gi.has_value();
        if (ok) {
          diff[*gi] -= 1;
        }
      }
      ok = ok && s.group.relations.contains(diff);
      ++report.checked;
      if (!ok) {
        report.failures.push_back(set.name());
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Localization
  ////////////////////////////////////////////////////////////////////////

  bool LocalizationStage::same_outcome(LocalizationStage const& o) const {
    return quotient_group == o.quotient_group && ambient_group == o.ambient_group
           && localized_group == o.localized_group && j_defined == o.j_defined
           && composite_zero == o.composite_zero && j_surjective == o.j_surjective
           && kernel_in_image == o.kernel_in_image;
  }

  LocalizationReport localization_check(MonoidPtr const& a, Elem s, std::size_t n_min,
                                        std::size_t n_max) {
    if (!a->is_commutative()) {
      throw NotAbelian(a->name() + " is not commutative");
    }
    auto const check = check_denominator_set(*a, s);
    if (!check.holds) {
      throw NotDenominatorSet(check.condition, check.a, check.b);
    }
    Elem const gens[] = {s};
    auto const loc    = localize(a, s);
    auto const quo    = quotient_monoid(a, ideal_generated(*a, gens));

    LocalizationReport report;
    report.monoid           = a->name();
    report.s                = s;
    report.ambient_pc       = is_pc_monoid(*a).holds;
    report.quotient_monoid  = quo.monoid->name();
    report.localized_monoid = loc.monoid->name();

    for (std::size_t b = n_min; b <= n_max; ++b) {
      auto const p1 = build_presentation(quo.monoid, Flavor::pc, b);
      auto const p2 = build_presentation(a, Flavor::pc, b);
      auto const p3 = build_presentation(loc.monoid, Flavor::pc, b);
      auto const s1 = smith(p1);
      auto const s2 = smith(p2);
      auto const s3 = smith(p3);

      LocalizationStage stage;
      stage.bound           = b;
      stage.quotient_group  = s1.group.describe();
      stage.ambient_group   = s2.group.describe();
      stage.localized_group = s3.group.describe();

      // i_*: restriction is rank-preserving and keeps pc sets pc.
      Hom                      i_star{&s1.group, &s2.group, {}};
      std::vector<std::size_t> i_index;
      for (auto const& x : p1.asets) {
        auto const key = canonical_key(restrict_scalars(quo.projection, x));
        auto const idx = p2.find(key);
        if (!idx) {
          throw Error("restriction of " + x.name() + " is missing from the presentation");
        }
        i_index.push_back(*idx);
        i_star.images.push_back(s2.classes.classes[*idx]);
      }
      // j^*: base change to A[1/s] is a quotient of X, so ranks only drop.
      Hom j_star{&s2.group, &s3.group, {}};
      for (auto const& x : p2.asets) {
        auto const idx = p3.find(canonical_key(base_change(loc.map, x)));
        if (!idx) {
          stage.j_defined = false;
          break;
        }
        j_star.images.push_back(s3.classes.classes[*idx]);
      }
      if (stage.j_defined) {
        stage.composite_zero = std::all_of(i_index.begin(), i_index.end(), [&](std::size_t k) {
          return s3.group.is_zero(j_star.images[k]);
        });
        stage.j_surjective    = j_star.is_surjective();
        stage.kernel_in_image = kernel_in_image(j_star, i_star);
      }
      report.stages.push_back(std::move(stage));
      auto const& st = report.stages;
      if (st.size() >= 2 && st[st.size() - 2].same_outcome(st.back())) {
        report.stabilized_bound = st[st.size() - 2].bound;
        break;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Burnside ring
  ////////////////////////////////////////////////////////////////////////

  FiniteASet coset_aset(MonoidPtr const& group_monoid, FiniteGroup const& g,
                        std::vector<std::size_t> const& h) {
    std::size_t const                     n = g.size();
    std::vector<std::vector<std::size_t>> cosets;
    std::vector<std::size_t>              which(n, 0);
    std::vector<bool>                     done(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) {
        continue;
      }
      std::vector<std::size_t> c;
      for (auto y : h) {
        c.push_back(g.mul(x, y));
      }
      std::sort(c.begin(), c.end());
      for (auto y : c) {
        done[y]  = true;
        which[y] = cosets.size();
      }
      cosets.push_back(std::move(c));
    }
    std::size_t const m = cosets.size() + 1;
    std::vector<Elem> act((n + 1) * m, kBase);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        act[(a + 1) * m + i + 1] = static_cast<Elem>(which[g.mul(a, cosets[i].front())] + 1);
      }
    }
    return FiniteASet::from_table(group_monoid, "G/H" + std::to_string(h.size()), m,
                                  std::move(act));
  }

  BurnsideReport burnside(FiniteGroup const& g) {
    std::size_t const n  = g.size();
    auto const        gm = share(make_group_monoid(g));
    BurnsideReport    report;
    report.group   = g.name();
    report.order   = n;
    report.classes = subgroup_class_representatives(g);
    std::size_t const k = report.classes.size();

    auto const p = build_presentation(gm, Flavor::all, n);
    auto const s = smith(p);
    report.generators = p.size();
    report.free_rank  = s.group.free_rank;
    report.torsion    = s.group.torsion;

    std::vector<FiniteASet> transitive;
    for (auto const& h : report.classes) {
      transitive.push_back(coset_aset(gm, g, h));
    }

    if (s.group.torsion.empty() && s.group.coords() == k) {
      IntMatrix basis(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        auto const idx = p.find(canonical_key(transitive[i]));
        if (!idx) {
          break;
        }
        for (std::size_t j = 0; j < k; ++j) {
          basis.at(i, j) = s.classes.classes[*idx][j];
        }
      }
      Integer const det       = determinant(basis);
      report.transitive_basis = det == 1 || det == -1;
    }

    auto fixed_by = [&](FiniteASet const& x, Elem q, std::vector<std::size_t> const& h) {
      return std::all_of(h.begin(), h.end(),
                         [&](std::size_t e) { return x.act(static_cast<Elem>(e + 1), q) == q; });
    };
    auto marks_of = [&](FiniteASet const& x) {
      std::vector<std::int64_t> row(k, 0);
      for (std::size_t j = 0; j < k; ++j) {
        for (Elem q = 1; q < x.size(); ++q) {
          row[j] += fixed_by(x, q, report.classes[j]) ? 1 : 0;
        }
      }
      return row;
    };
    for (auto const& t : transitive) {
      report.marks.push_back(marks_of(t));
    }

    // Stabilizer of a point, matched to its conjugacy class representative.
    auto class_of_point = [&](FiniteASet const& x, Elem q) -> std::size_t {
      std::vector<std::size_t> stab;
      for (std::size_t e = 0; e < n; ++e) {
        if (x.act(static_cast<Elem>(e + 1), q) == q) {
          stab.push_back(e);
        }
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (report.classes[c].size() != stab.size()) {
          continue;
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (conjugate(g, report.classes[c], y) == stab) {
            return c;
          }
        }
      }
      throw Error("stabilizer matches no subgroup class");
    };

    report.product.assign(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
    report.marks_multiplicative = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const&       x  = transitive[i];
        auto const&       y  = transitive[j];
        std::size_t const my = y.size() - 1;
        std::size_t const m  = 1 + (x.size() - 1) * my;
        std::vector<Elem> act((n + 1) * m, kBase);
        for (Elem a = 1; a <= n; ++a) {
          for (Elem p1 = 1; p1 < x.size(); ++p1) {
            for (Elem q1 = 1; q1 < y.size(); ++q1) {
              act[a * m + 1 + (p1 - 1) * my + (q1 - 1)] =
                  static_cast<Elem>(1 + (x.act(a, p1) - 1) * my + (y.act(a, q1) - 1));
            }
          }
        }
        auto const        prod = FiniteASet::from_table(gm, "prod", m, std::move(act));
        std::vector<bool> seen(m, false);
        for (Elem q = 1; q < m; ++q) {
          if (seen[q]) {
            continue;
          }
          for (Elem a = 1; a <= n; ++a) {
            seen[prod.act(a, q)] = true;
          }
          ++report.product[i][j][class_of_point(prod, q)];
        }
        auto const direct = marks_of(prod);
        for (std::size_t l = 0; l < k; ++l) {
          if (direct[l] != report.marks[i][l] * report.marks[j][l]) {
            report.marks_multiplicative = false;
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // G_0 of N-sets
  ////////////////////////////////////////////////////////////////////////

  NSetG0Report g0_nset_report(std::size_t bound, bool tails) {
    NSetG0Report r;
    r.tails        = tails;
    r.bound        = bound;
    r.presentation = build_nset_presentation(bound, tails);
    r.smith        = smith(r.presentation);
    r.s0           = r.presentation.find(fgn_key(FgNSet::from_finite(path_nset(1))));
    if (tails) {
      r.chain = r.presentation.find(fgn_key(free_chain()));
    }
    for (std::size_t d = 1; d <= bound; ++d) {
      auto const idx = r.presentation.find(fgn_key(FgNSet::from_finite(loop_nset(d))));
      if (idx) {
        r.loops.push_back(*idx);
      }
    }
    return r;
  }

  std::pair<NSetG0Report, NSetG0Report> g0_nset_reports(std::size_t bound) {
    return {g0_nset_report(bound, false), g0_nset_report(bound, true)};
  }

}  // namespace kprime
