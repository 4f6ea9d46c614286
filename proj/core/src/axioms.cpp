#include "kprime/axioms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "kprime/errors.hpp"
#include "kprime/io.hpp"

namespace kprime {

  namespace {

    // A check that failed inside one sampled instance.
    struct Violation {
      std::string what;
    };

    void require(bool cond, char const* what) {
      if (!cond) {
        throw Violation{what};
      }
    }

    // Everything needed to replay a failing instance.
    class Dump {
     public:
      FiniteASet const& set(std::string label, FiniteASet const& x) {
        _sets.emplace_back(std::move(label), x);
        return x;
      }
      ASubset const& subset(std::string label, ASubset const& y) {
        _subsets.emplace_back(std::move(label), y.members());
        return y;
      }
      std::string render(std::string const& what) const {
        std::ostringstream os;
        os << what << "\n";
        for (auto const& [label, x] : _sets) {
          os << "[" << label << "]\n" << write_aset(x.renamed(label));
        }
        for (auto const& [label, members] : _subsets) {
          os << "[" << label << "]";
          for (auto p : members) {
            os << " " << p;
          }
          os << "\n";
        }
        return os.str();
      }

     private:
      std::vector<std::pair<std::string, FiniteASet>>        _sets;
      std::vector<std::pair<std::string, std::vector<Elem>>> _subsets;
    };

    using Body = std::function<void(Rng&, Dump&)>;

    AxiomReport run(std::string const& axiom, MonoidPtr const& a, SampleConfig const& cfg,
                    Body const& body) {
      AxiomReport report{axiom, a->name(), 0, {}, cfg.seed};
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        // One substream per instance, so instance i replays on its own.
        auto rng = Rng::substream(cfg.seed, axiom + "/" + a->name(), i);
        Dump dump;
        std::optional<std::string> failure;
        try {
          body(rng, dump);
        } catch (Violation const& v) {
          failure = v.what;
        } catch (Error const& e) {
          failure = std::string("exception: ") + e.what();
        }
        ++report.tested;
        if (failure && report.failures.size() < cfg.max_failures) {
          report.failures.push_back("instance " + std::to_string(i) + ": " + dump.render(*failure));
        } else if (failure) {
          report.failures.push_back("instance " + std::to_string(i) + ": " + *failure);
        }
      }
      return report;
    }

    // The h with h o f = g, for f surjective; requires g constant on the
    // fibres of f and h equivariant.
    ASetMap factor_through_epi(ASetMap const& f, ASetMap const& g) {
      require(is_surjective(f), "factoring map is not surjective");
      std::vector<Elem> h(f.target.size(), kBase);
      std::vector<bool> set(f.target.size(), false);
      for (Elem x = 0; x < f.source.size(); ++x) {
        auto const y = f(x);
        if (set[y]) {
          require(h[y] == g(x), "map is not constant on the fibres of the epi");
        }
        h[y]   = g(x);
        set[y] = true;
      }
      return make_aset_map(f.target, g.target, std::move(h));
    }

    // The h with m o h = f, for m injective; requires image(f) in image(m).
    ASetMap factor_through_monic(ASetMap const& f, ASetMap const& m) {
      require(is_injective(m), "factoring map is not injective");
      std::vector<Elem> back(m.target.size(), kBase);
      std::vector<bool> hit(m.target.size(), false);
      for (Elem y = 0; y < m.source.size(); ++y) {
        back[m(y)] = y;
        hit[m(y)]  = true;
      }
      std::vector<Elem> h(f.source.size());
      for (Elem x = 0; x < f.source.size(); ++x) {
        require(hit[f(x)], "map does not land in the image of the monic");
        h[x] = back[f(x)];
      }
      return make_aset_map(f.source, m.source, std::move(h));
    }

    ASetMap inverse(ASetMap const& f) {
      require(is_bijective(f), "inverting a map that is not bijective");
      std::vector<Elem> inv(f.source.size());
      for (Elem x = 0; x < f.source.size(); ++x) {
        inv[f(x)] = x;
      }
      return make_aset_map(f.target, f.source, std::move(inv));
    }

    bool is_zero_map(ASetMap const& f) {
      return std::all_of(f.map.begin(), f.map.end(), [](Elem y) { return y == kBase; });
    }

    bool same_map(ASetMap const& f, ASetMap const& g) {
      return f.map == g.map && f.target.size() == g.target.size()
             && f.target.table() == g.target.table();
    }

    bool isomorphic(FiniteASet const& x, FiniteASet const& y) {
      return iso_test(x, y).has_value();
    }

    // The A-subset f(Y) of the target.
    ASubset image_of(ASetMap const& f, ASubset const& y) {
      std::vector<bool> mask(f.target.size(), false);
      for (auto p : y.members()) {
        mask[f(p)] = true;
      }
      return ASubset::from_mask(f.target, std::move(mask));
    }

    // An admissible sequence Y >-> X ->> Z with both ends relabelled, so the
    // maps are not literal inclusions and projections.
    struct Sequence {
      ASetMap i;
      ASetMap j;
    };

    Sequence random_sequence(FiniteASet const& x, ASubset const& y, Rng& rng) {
      auto const sub = restrict_to(x, y);
      auto const quo = quotient_aset(x, y);
      auto const py  = random_iso(sub.set, rng);
      auto const pz  = random_iso(quo.set, rng);
      return {compose(sub.inclusion, inverse(py)), compose(pz, quo.projection)};
    }

    FiniteASet sample(MonoidPtr const& a, Rng& rng, SampleConfig const& cfg, Dump& d,
                      std::string label = "X") {
      return d.set(std::move(label), random_aset(a, rng, cfg.max_rank));
    }

    ////////////////////////////////////////////////////////////////////////
    // Quasi-exact clauses
    ////////////////////////////////////////////////////////////////////////

    void qe_i(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const s  = random_sequence(x, y, rng);
      auto const px = random_iso(x, rng);
      // The same sequence transported along an isomorphism of the middle term.
      auto const i2 = compose(px, s.i);
      auto const j2 = compose(s.j, inverse(px));
      require(is_admissible_sequence(s.i, s.j), "relabelled sequence is not admissible");
      require(is_admissible_sequence(i2, j2), "isomorphic sequence is not admissible");
    }

    void qe_ii(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x = sample(a, rng, cfg, d);
      auto const y = d.subset("Y", random_subset(x, rng));
      auto const s = random_sequence(x, y, rng);
      require(kernel(s.j) == image(s.i), "kernel of j differs from image of i");
      require(is_zero_map(compose(s.j, s.i)), "j o i is not zero");
      // Cokernel: a map killing Y factors uniquely through j.
      auto const w = d.subset("W", subset_union(y, random_subset(x, rng)));
      auto const f = quotient_aset(x, w).projection;
      require(is_zero_map(compose(f, s.i)), "test map does not kill Y");
      auto const h = factor_through_epi(s.j, f);
      require(same_map(compose(h, s.j), f), "cokernel factorisation does not commute");
      // Kernel: a map into X killed by j factors uniquely through i.
      auto const v = d.subset("V", subset_intersection(y, random_subset(x, rng)));
      auto const g = restrict_to(x, v).inclusion;
      require(is_zero_map(compose(s.j, g)), "test map is not killed by j");
      auto const k = factor_through_monic(g, s.i);
      require(same_map(compose(s.i, k), g), "kernel factorisation does not commute");
    }

    void qe_iii(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const half = std::max<std::size_t>(1, cfg.max_rank / 2);
      auto const y    = d.set("Y", random_aset(a, rng, half));
      auto const z    = d.set("Z", random_aset(a, rng, half));
      auto const w    = wedge(y, z);
      require(is_admissible_sequence(w.left, w.collapse_left), "Y >-> YvZ ->> Z not admissible");
      require(is_admissible_sequence(w.right, w.collapse_right), "Z >-> YvZ ->> Y not admissible");
      auto const p = random_iso(w.set, rng);
      require(is_admissible_sequence(compose(p, w.left), compose(w.collapse_left, inverse(p))),
              "split sequence through an isomorphic middle term not admissible");
    }

    void qe_epi_compose(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const q1 = quotient_aset(x, y);
      auto const y2 = random_subset(q1.set, rng);
      auto const q2 = quotient_aset(q1.set, y2);
      auto const p  = random_iso(q2.set, rng);
      auto const j  = compose(p, compose(q2.projection, q1.projection));
      require(is_admissible_epi(j), "composite of admissible epis is not admissible");
      require(kernel(j) == preimage(q1.projection, y2), "composite epi has the wrong kernel");
    }

    void qe_monic_compose(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const s1 = restrict_to(x, y);
      auto const y2 = random_subset(s1.set, rng);
      auto const s2 = restrict_to(s1.set, y2);
      auto const p  = random_iso(s2.set, rng);
      auto const i  = compose(s1.inclusion, compose(s2.inclusion, inverse(p)));
      require(is_admissible_monic(i), "composite of admissible monics is not admissible");
      require(image(i).is_subset_of(y), "composite monic leaves Y");
    }

    void qe_epi_pullback(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const s  = random_sequence(x, y, rng);
      auto const zp = random_subset(s.j.target, rng);
      auto const m  = restrict_to(s.j.target, zp).inclusion;
      auto const pb = fiber_product(s.j, m);
      require(is_admissible_epi(pb.to_right), "pullback of an epi along a monic is not admissible");
      require(is_admissible_monic(pb.to_left), "pullback of a monic is not a monic");
      require(image(pb.to_left) == preimage(s.j, zp), "pullback is not the preimage");
    }

    void qe_monic_pullback(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x0 = sample(a, rng, cfg, d, "X0");
      auto const w  = d.subset("W", random_subset(x0, rng));
      auto const p  = quotient_aset(x0, w).projection;
      auto const y  = random_subset(p.target, rng);
      auto const i  = restrict_to(p.target, y).inclusion;
      auto const pb = fiber_product(i, p);
      require(is_admissible_monic(pb.to_right),
              "pullback of a monic along an epi is not admissible");
      require(image(pb.to_right) == preimage(p, y), "pullback is not the preimage");
      require(is_admissible_epi(pb.to_left), "pullback of an epi along a monic is not an epi");
    }

    ////////////////////////////////////////////////////////////////////////
    // CGW
    ////////////////////////////////////////////////////////////////////////

    void cgw_z(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const pt = point_aset(a);
      auto const z  = make_aset_map(pt, x, {kBase});
      auto const t  = make_aset_map(x, pt, std::vector<Elem>(x.size(), kBase));
      require(is_admissible_monic(z), "0 -> X is not an admissible monic");
      require(is_admissible_epi(t), "X -> 0 is not an admissible epi");
      require(is_admissible_sequence(z, identity_map(x)), "0 >-> X ->> X not admissible");
      require(is_admissible_sequence(identity_map(x), t), "X >-> X ->> 0 not admissible");
      require(all_subsets(pt).size() == 1, "the point has a proper A-subset");
    }

    ASetMap random_map(FiniteASet const& x, Rng& rng) {
      switch (rng.below(4)) {
        case 0:
          return restrict_to(x, random_subset(x, rng)).inclusion;
        case 1:
          return quotient_aset(x, random_subset(x, rng)).projection;
        case 2:
          return random_iso(x, rng);
        default: {
          auto const q = quotient_aset(x, random_subset(x, rng));
          auto const s = restrict_to(q.set, random_subset(q.set, rng));
          return s.inclusion;
        }
      }
    }

    void cgw_i(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x = sample(a, rng, cfg, d);
      auto const p = random_iso(x, rng);
      require(is_admissible_monic(p) && is_admissible_epi(p),
              "an isomorphism is not both an admissible monic and epi");
      auto const q = compose(random_iso(p.target, rng), p);
      require(is_admissible_monic(q) && is_admissible_epi(q), "composite isomorphism fails");
      // Isomorphic objects have isomorphic admissible sequences.
      auto const y = d.subset("Y", random_subset(x, rng));
      require(isomorphic(quotient_aset(x, y).set, quotient_aset(p.target, image_of(p, y)).set),
              "quotients of isomorphic pairs differ");
    }

    void cgw_iso(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x = sample(a, rng, cfg, d);
      auto const f = random_map(x, rng);
      require((is_admissible_monic(f) && is_admissible_epi(f)) == is_bijective(f),
              "monic-and-epi does not match isomorphism");
    }

    void cgw_a(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const half = std::max<std::size_t>(1, cfg.max_rank / 2);
      auto const y    = d.set("Y", random_aset(a, rng, half));
      auto const z    = d.set("Z", random_aset(a, rng, half));
      auto const w    = wedge(y, z);
      auto const q    = quotient_aset(w.set, image(w.left));
      auto const h    = factor_through_epi(q.projection, w.collapse_left);
      require(is_bijective(h), "cokernel of Y >-> YvZ is not Z");
      require(is_zero_map(compose(w.collapse_left, w.left)), "split sequence does not compose to 0");
      require(same_map(compose(w.collapse_right, w.left), identity_map(y)),
              "splitting does not restrict to the identity");
    }

    void cgw_k(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x = sample(a, rng, cfg, d);
      auto const y = d.subset("Y", random_subset(x, rng));
      // k(c(Y >-> X)) = (Y >-> X).
      auto const c = quotient_aset(x, y).projection;
      require(kernel(c) == y, "k(c(i)) is not i");
      // c(k(j)) = j for an epi presented up to isomorphism.
      auto const j  = compose(random_iso(c.target, rng), c);
      auto const kj = kernel(j);
      auto const ck = quotient_aset(x, kj).projection;
      auto const h  = factor_through_epi(ck, j);
      require(is_bijective(h), "c(k(j)) is not j");
    }

    void cgw_m(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const q1 = quotient_aset(x, y);
      auto const q2 = quotient_aset(q1.set, random_subset(q1.set, rng));
      auto const j  = compose(random_iso(q2.set, rng), compose(q2.projection, q1.projection));
      auto const i  = restrict_to(x, kernel(j)).inclusion;
      require(is_admissible_sequence(i, j), "kernel and composite epi do not form a sequence");
      // i is the kernel of j: maps killed by j factor through i.
      auto const v = random_subset(x, rng);
      auto const g = restrict_to(x, subset_intersection(v, kernel(j))).inclusion;
      require(same_map(compose(i, factor_through_monic(g, i)), g), "kernel property fails");
      // j is the cokernel of i.
      auto const f = quotient_aset(x, subset_union(kernel(j), v)).projection;
      require(same_map(compose(factor_through_epi(j, f), j), f), "cokernel property fails");
    }

    ////////////////////////////////////////////////////////////////////////
    // ACGW
    ////////////////////////////////////////////////////////////////////////

    void acgw_p(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const z  = d.subset("Z", random_subset(x, rng));
      auto const sy = restrict_to(x, y);
      auto const sz = restrict_to(x, z);
      // Monics are closed under pullback: Y x_X Z = Y n Z.
      auto const pb = fiber_product(sy.inclusion, sz.inclusion);
      require(is_admissible_monic(pb.to_left) && is_admissible_monic(pb.to_right),
              "pullback of monics has a non-monic leg");
      require(image(compose(sy.inclusion, pb.to_left)) == subset_intersection(y, z),
              "pullback of monics is not the intersection");
      // Epis are closed under pushout: X/Y u_X X/Z = X/(Y u Z).
      auto const qy = quotient_aset(x, y);
      auto const qz = quotient_aset(x, z);
      auto const po = pushout_of(qy.projection, qz.projection);
      require(is_admissible_epi(po.from_left) && is_admissible_epi(po.from_right),
              "pushout of epis has a non-epi leg");
      auto const to_po = compose(po.from_left, qy.projection);
      require(kernel(to_po) == subset_union(y, z), "pushout of epis is not X/(Y u Z)");
      require(is_admissible_epi(to_po), "X -> pushout is not an admissible epi");
    }

    void acgw_u(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x    = sample(a, rng, cfg, d);
      auto const y    = d.subset("Y", random_subset(x, rng));
      auto const z    = d.subset("Z", random_subset(x, rng));
      auto const meet = subset_intersection(y, z);
      auto const join = subset_union(y, z);

      auto const sy = restrict_to(x, y);
      auto const sz = restrict_to(x, z);
      auto const sm = restrict_to(x, meet);
      auto const qy = quotient_aset(x, y);
      auto const qz = quotient_aset(x, z);
      auto const po = pushout_of(qz.projection, qy.projection);  // (X/Z) u_X (X/Y)

      // Middle row and middle column.
      require(is_admissible_sequence(sy.inclusion, qy.projection), "Y >-> X ->> X/Y");
      require(is_admissible_sequence(sz.inclusion, qz.projection), "Z >-> X ->> X/Z");
      // Corner: X ->> pushout has kernel Y u Z.
      auto const corner = compose(po.from_left, qz.projection);
      require(same_map(corner, compose(po.from_right, qy.projection)),
              "pushout square does not commute");
      require(kernel(corner) == join && is_admissible_epi(corner),
              "pushout corner is not X/(Y u Z)");

      // Left column Y n Z >-> Y ->> box, top row box >-> X/Z ->> pushout.
      auto const m_in_y = factor_through_monic(sm.inclusion, sy.inclusion);
      auto const box    = quotient_aset(sy.set, image(m_in_y));
      require(is_admissible_sequence(m_in_y, box.projection), "Y n Z >-> Y ->> box");
      auto const box_in = factor_through_epi(box.projection, compose(qz.projection, sy.inclusion));
      require(is_admissible_sequence(box_in, po.from_left), "box >-> X/Z ->> pushout");
      require(isomorphic(box.set, noether_witness(x, y, z).target), "box is not (Y u Z)/Z");

      // Bottom row Y n Z >-> Z ->> D, right column D >-> X/Y ->> pushout.
      auto const m_in_z = factor_through_monic(sm.inclusion, sz.inclusion);
      auto const dq     = quotient_aset(sz.set, image(m_in_z));
      require(is_admissible_sequence(m_in_z, dq.projection), "Y n Z >-> Z ->> D");
      auto const d_in = factor_through_epi(dq.projection, compose(qy.projection, sz.inclusion));
      require(is_admissible_sequence(d_in, po.from_right), "D >-> X/Y ->> pushout");

      // The remaining squares commute.
      require(same_map(compose(box_in, box.projection), compose(qz.projection, sy.inclusion)),
              "upper-left square does not commute");
      require(same_map(compose(d_in, dq.projection), compose(qy.projection, sz.inclusion)),
              "lower-right square does not commute");
      require(same_map(compose(sy.inclusion, m_in_y), compose(sz.inclusion, m_in_z)),
              "lower-left square does not commute");
    }

    void acgw_s(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x    = sample(a, rng, cfg, d);
      auto const y    = d.subset("Y", random_subset(x, rng));
      auto const z    = d.subset("Z", random_subset(x, rng));
      auto const sy   = restrict_to(x, y);
      auto const sz   = restrict_to(x, z);
      auto const sm   = restrict_to(x, subset_intersection(y, z));
      auto const to_y = factor_through_monic(sm.inclusion, sy.inclusion);
      auto const to_z = factor_through_monic(sm.inclusion, sz.inclusion);
      // P = Y u_{Y n Z} Z exists and is the union inside X.
      auto const p = pushout(to_y, to_z);
      std::vector<Elem> into(p.set.size(), kBase);
      for (Elem u = 0; u < sy.set.size(); ++u) {
        into[p.from_left(u)] = sy.inclusion(u);
      }
      for (Elem u = 0; u < sz.set.size(); ++u) {
        into[p.from_right(u)] = sz.inclusion(u);
      }
      auto const p_in = make_aset_map(p.set, x, std::move(into));
      require(is_admissible_monic(p_in), "Y u_{Y n Z} Z does not embed in X");
      require(image(p_in) == subset_union(y, z), "pushout of monics is not Y u Z");
      // X/P is the pushout of X/Y and X/Z under X.
      auto const xp = quotient_aset(x, image(p_in));
      auto const qy = quotient_aset(x, y);
      auto const qz = quotient_aset(x, z);
      auto const po = pushout_of(qy.projection, qz.projection);
      auto const h  = factor_through_epi(xp.projection, compose(po.from_left, qy.projection));
      require(is_bijective(h), "X/P is not the pushout of X/Y and X/Z");
    }

    void acgw_s_dual(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const z  = d.subset("Z", random_subset(x, rng));
      auto const qy = quotient_aset(x, y);
      auto const qz = quotient_aset(x, z);
      auto const po = pushout_of(qy.projection, qz.projection);
      // L = X/(Y n Z) is the pullback of X/Y and X/Z over the pushout among
      // quotients of X: both legs are admissible epis, the square commutes,
      // and the kernel of X ->> L is Y n Z.
      auto const meet = subset_intersection(y, z);
      auto const l    = quotient_aset(x, meet);
      auto const ly   = factor_through_epi(l.projection, qy.projection);
      auto const lz   = factor_through_epi(l.projection, qz.projection);
      require(is_admissible_epi(ly) && is_admissible_epi(lz), "L ->> X/Y or L ->> X/Z fails");
      require(same_map(compose(po.from_left, ly), compose(po.from_right, lz)),
              "pullback square over the pushout does not commute");
      require(kernel(l.projection) == meet, "kernel of X ->> L is not Y n Z");
      // L embeds in the set-level fibre product.
      auto const        fp = fiber_product(po.from_left, po.from_right);
      std::vector<Elem> emb(l.set.size(), kBase);
      for (Elem p = 0; p < fp.set.size(); ++p) {
        for (Elem q = 0; q < l.set.size(); ++q) {
          if (fp.to_left(p) == ly(q) && fp.to_right(p) == lz(q)) {
            emb[q] = p;
          }
        }
      }
      auto const e = make_aset_map(l.set, fp.set, std::move(emb));
      require(is_injective(e), "L does not embed in X/Y x X/Z");
    }

    void acgw_pp(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x0 = sample(a, rng, cfg, d, "X0");
      auto const v  = d.subset("V", random_subset(x0, rng));
      auto const sv = restrict_to(x0, v);
      ASetMap    vx = sv.inclusion;
      ASetMap    vy = sv.inclusion;
      if (rng.chance(1, 2)) {
        // X and Y both sit inside X0 and meet in at least V.
        auto const s1 = restrict_to(x0, subset_union(v, random_subset(x0, rng)));
        auto const s2 = restrict_to(x0, subset_union(v, random_subset(x0, rng)));
        vx            = factor_through_monic(sv.inclusion, s1.inclusion);
        vy            = factor_through_monic(sv.inclusion, s2.inclusion);
      } else {
        // Y = V v W with V a summand.
        auto const w = wedge(sv.set, random_aset(a, rng, std::max<std::size_t>(1, cfg.max_rank / 2)));
        vx           = sv.inclusion;
        vy           = w.left;
      }
      vy            = compose(random_iso(vy.target, rng), vy);
      auto const po = pushout(vx, vy);
      require(is_admissible_monic(po.from_left) && is_admissible_monic(po.from_right),
              "X or Y does not embed in X u_V Y");
      auto const fp = fiber_product(po.from_left, po.from_right);
      require(fp.set.size() == sv.set.size(), "X n Y in X u_V Y is larger than V");
      require(image(fp.to_left) == image(vx), "X n Y in X u_V Y is not V");
    }

    void acgw_pp_dual(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x0 = sample(a, rng, cfg, d, "X0");
      auto const w  = d.subset("W", random_subset(x0, rng));
      auto const w1 = subset_intersection(w, random_subset(x0, rng));
      auto const w2 = subset_intersection(w, random_subset(x0, rng));
      auto const qz = quotient_aset(x0, w);
      auto const q1 = quotient_aset(x0, w1);
      auto const q2 = quotient_aset(x0, w2);
      auto const px = random_iso(q1.set, rng);
      auto const py = random_iso(q2.set, rng);
      // p: X ->> Z and q: Y ->> Z, with X and Y relabelled.
      auto const p = compose(factor_through_epi(q1.projection, qz.projection), inverse(px));
      auto const q = compose(factor_through_epi(q2.projection, qz.projection), inverse(py));
      require(is_admissible_epi(p) && is_admissible_epi(q), "sampled maps are not epis");
      auto const fp = fiber_product(p, q);
      require(is_surjective(fp.to_left), "X x_Z Y -> X is not surjective");
      auto const k  = kernel(fp.to_left);
      auto const kr = image_of(fp.to_right, k);
      require(kr == kernel(q), "kernel of X x_Z Y ->> X is not the kernel of Y ->> Z");
      require(k.size() == kernel(q).size(), "kernels differ in size");
    }

    void distinguished_square(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x  = sample(a, rng, cfg, d);
      auto const y  = d.subset("Y", random_subset(x, rng));
      auto const w  = d.subset("W", subset_intersection(y, random_subset(x, rng)));
      auto const sy = restrict_to(x, y);
      auto const qx = quotient_aset(x, w);                                // X ->> X/W
      auto const qy = quotient_aset(sy.set, preimage(sy.inclusion, w));  // Y ->> Y/W
      auto const top = factor_through_epi(qy.projection, compose(qx.projection, sy.inclusion));
      require(is_admissible_monic(top), "Y/W -> X/W is not monic");
      // Distinguished: X/Y -> (X/W)/(Y/W) is an isomorphism.
      auto const c1 = quotient_aset(x, y);
      auto const c2 = quotient_aset(qx.set, image(top));
      auto const h  = factor_through_epi(c1.projection, compose(c2.projection, qx.projection));
      require(is_bijective(h), "map of cokernels is not an isomorphism");
      // Distinguished squares are pullbacks and pushouts.
      auto const pb = fiber_product(qx.projection, top);
      require(pb.set.size() == sy.set.size() && image(pb.to_left) == y,
              "distinguished square is not a pullback");
      auto const po = pushout_of(qy.projection, sy.inclusion);
      require(isomorphic(po.set, qx.set), "distinguished square is not a pushout");
    }

    void first_isomorphism(MonoidPtr const& a, SampleConfig const& cfg, Rng& rng, Dump& d) {
      auto const x   = sample(a, rng, cfg, d);
      auto const y   = d.subset("Y", random_subset(x, rng));
      auto const z   = d.subset("Z", random_subset(x, rng));
      auto const sy  = restrict_to(x, y);
      auto const lhs = quotient_aset(sy.set, preimage(sy.inclusion, subset_intersection(y, z)));
      auto const qz  = quotient_aset(x, z);
      auto const qu  = quotient_aset(x, subset_union(y, z));
      auto const i   = factor_through_epi(lhs.projection, compose(qz.projection, sy.inclusion));
      auto const j   = factor_through_epi(qz.projection, qu.projection);
      require(is_admissible_sequence(i, j), "Y/(Y n Z) >-> X/Z ->> X/(Y u Z) is not admissible");
      auto const n = noether_witness(x, y, z);
      require(is_bijective(n), "Y/(Y n Z) -> (Y u Z)/Z is not an isomorphism");
    }

    using Check = void (*)(MonoidPtr const&, SampleConfig const&, Rng&, Dump&);

    std::vector<AxiomReport> run_all(MonoidPtr const& a, SampleConfig const& cfg,
                                     std::vector<std::pair<char const*, Check>> const& checks) {
      std::vector<AxiomReport> out;
      for (auto const& [id, check] : checks) {
        out.push_back(run(id, a, cfg, [&, check = check](Rng& rng, Dump& d) {
          check(a, cfg, rng, d);
        }));
      }
      return out;
    }

    std::vector<std::pair<char const*, Check>> const kQuasiExact{
        {"qe-i", qe_i},
        {"qe-ii", qe_ii},
        {"qe-iii", qe_iii},
        {"qe-iv-epi-compose", qe_epi_compose},
        {"qe-iv-epi-pullback", qe_epi_pullback},
        {"qe-iv-monic-compose", qe_monic_compose},
        {"qe-iv-monic-pullback", qe_monic_pullback},
    };
    std::vector<std::pair<char const*, Check>> const kCgw{
        {"cgw-Z", cgw_z}, {"cgw-I", cgw_i}, {"cgw-A", cgw_a},
        {"cgw-K", cgw_k}, {"cgw-M", cgw_m}, {"cgw-iso", cgw_iso},
    };
    std::vector<std::pair<char const*, Check>> const kAcgw{
        {"acgw-P", acgw_p},
        {"acgw-U", acgw_u},
        {"acgw-S", acgw_s},
        {"acgw-S-dual", acgw_s_dual},
        {"acgw-PP", acgw_pp},
        {"acgw-PP-dual", acgw_pp_dual},
        {"distinguished-square", distinguished_square},
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Sampling
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // A quotient of A^{v k} by a random congruence, squeezed to max_rank.
    FiniteASet quotient_sample(MonoidPtr const& a, Rng& rng, std::size_t max_rank, std::size_t k) {
      FiniteASet x = free_aset(a, k);
      // A random point, the base only one time in eight.
      auto pick = [&](FiniteASet const& s) {
        if (s.size() == 1 || rng.chance(1, 8)) {
          return kBase;
        }
        return static_cast<Elem>(1 + rng.below(s.size() - 1));
      };
      std::vector<std::pair<Elem, Elem>> pairs;
      std::size_t const                  extra = rng.below(3);
      for (std::size_t t = 0; t < extra; ++t) {
        pairs.emplace_back(pick(x), pick(x));
      }
      x = quotient_by_pairs(x, pairs).set;
      if (rng.chance(1, 4)) {
        x = quotient_aset(x, random_subset(x, rng)).set;
      }
      while (x.rank() > max_rank) {
        x = quotient_by_pairs(x, {{pick(x), pick(x)}}).set;
      }
      return x;
    }

  }  // namespace

  FiniteASet random_aset(MonoidPtr const& a, Rng& rng, std::size_t max_rank) {
    auto const roll = rng.below(16);
    if (roll == 0 || max_rank == 0) {
      return point_aset(a).renamed("R");
    }
    if (roll == 1 && max_rank >= 2) {
      auto const l = random_aset(a, rng, max_rank / 2);
      auto const r = random_aset(a, rng, max_rank - max_rank / 2);
      return wedge(l, r).set.renamed("R");
    }
    std::size_t const step  = std::max<std::size_t>(a->size(), 2) - 1;
    std::size_t const max_k = std::clamp<std::size_t>((max_rank + step) / step, 1, 4);
    FiniteASet        x     = point_aset(a);
    // Nilpotent monoids collapse often; a few redraws keep points rare.
    for (int attempt = 0; attempt < 3 && x.rank() == 0; ++attempt) {
      x = quotient_sample(a, rng, max_rank, 1 + rng.below(max_k));
    }
    return x.renamed("R");
  }

  ASubset random_subset(FiniteASet const& x, Rng& rng) {
    auto const roll = rng.below(10);
    if (roll == 0 || x.size() == 1) {
      std::vector<bool> mask(x.size(), false);
      mask[kBase] = true;
      return ASubset::from_mask_unchecked(std::move(mask));
    }
    if (roll == 1) {
      return ASubset::from_mask_unchecked(std::vector<bool>(x.size(), true));
    }
    std::vector<Elem> seeds;
    std::size_t const count = 1 + rng.below(2);
    for (std::size_t i = 0; i < count; ++i) {
      seeds.push_back(static_cast<Elem>(1 + rng.below(x.size() - 1)));
    }
    return generated_subset(x, seeds);
  }

  ASetMap random_iso(FiniteASet const& x, Rng& rng) {
    std::vector<Elem> perm(x.size());
    for (Elem p = 0; p < x.size(); ++p) {
      perm[p] = p;
    }
    // Fisher-Yates over the non-base points.
    for (std::size_t i = x.size(); i > 2; --i) {
      auto const j = 1 + rng.below(i - 1);
      std::swap(perm[i - 1], perm[j]);
    }
    auto target = relabel(x, perm);
    return make_aset_map(x, std::move(target), std::move(perm));
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites and reports
  ////////////////////////////////////////////////////////////////////////

  std::vector<AxiomReport> check_quasi_exact(MonoidPtr const& a, SampleConfig const& cfg) {
    return run_all(a, cfg, kQuasiExact);
  }

  std::vector<AxiomReport> check_cgw(MonoidPtr const& a, SampleConfig const& cfg) {
    return run_all(a, cfg, kCgw);
  }

  std::vector<AxiomReport> check_acgw(MonoidPtr const& a, SampleConfig const& cfg) {
    return run_all(a, cfg, kAcgw);
  }

  AxiomReport check_first_isomorphism(MonoidPtr const& a, SampleConfig const& cfg) {
    return run_all(a, cfg, {{"first-isomorphism", first_isomorphism}}).front();
  }

  std::vector<AxiomReport> check_all_axioms(MonoidPtr const& a, SampleConfig const& cfg) {
    auto out = check_quasi_exact(a, cfg);
    for (auto* suite : {&check_cgw, &check_acgw}) {
      auto more = suite(a, cfg);
      out.insert(out.end(), more.begin(), more.end());
    }
    out.push_back(check_first_isomorphism(a, cfg));
    return out;
  }

  std::vector<std::string> axiom_ids() {
    std::vector<std::string> ids;
    for (auto const* suite : {&kQuasiExact, &kCgw, &kAcgw}) {
      for (auto const& [id, check] : *suite) {
        ids.emplace_back(id);
      }
    }
    ids.emplace_back("first-isomorphism");
    return ids;
  }

  std::string to_json(AxiomReport const& r) {
    nlohmann::json j{{"axiom", r.axiom},
                     {"monoid", r.monoid},
                     {"tested", r.tested},
                     {"failures", r.failures},
                     {"seed", r.seed}};
    return j.dump();
  }

  AxiomReport merge(AxiomReport a, AxiomReport const& b) {
    if (a.axiom != b.axiom) {
      throw Error("merging reports of different axioms");
    }
    if (a.monoid != b.monoid) {
      a.monoid += "," + b.monoid;
    }
    a.tested += b.tested;
    a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
    return a;
  }

}  // namespace kprime
