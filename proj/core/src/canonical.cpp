#include "kprime/canonical.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace kprime {

  namespace {

    class Canonicalizer {
     public:
      Canonicalizer(std::size_t m, std::size_t k, std::span<Elem const> maps,
                    std::span<std::uint32_t const> colors)
          : _m(m), _k(k), _maps(maps.begin(), maps.end()), _init(m, 0) {
        for (std::size_t x = 0; x < m && x < colors.size(); ++x) {
          _init[x] = colors[x];
        }
        _preimages.assign(_k * _m, {});
        for (std::size_t j = 0; j < _k; ++j) {
          for (std::size_t x = 0; x < _m; ++x) {
            _preimages[j * _m + _maps[j * _m + x]].push_back(static_cast<Elem>(x));
          }
        }
      }

      CanonicalLabeling run() {
        std::vector<std::uint32_t> start(_m);
        for (std::size_t x = 0; x < _m; ++x) {
          // Base point first, then the caller's colours.
          start[x] = x == 0 ? 0 : _init[x] + 1;
        }
        search(rank(start, [&](std::size_t x) { return std::vector<std::uint32_t>{start[x]}; }));
        return std::move(_best);
      }

     private:
      template <typename SigFn>
      std::vector<std::uint32_t> rank(std::vector<std::uint32_t> const&, SigFn sig) {
        std::vector<std::vector<std::uint32_t>> sigs(_m);
        for (std::size_t x = 0; x < _m; ++x) {
          sigs[x] = sig(x);
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::uint32_t> out(_m);
        for (std::size_t x = 0; x < _m; ++x) {
          out[x] = static_cast<std::uint32_t>(
              std::lower_bound(sorted.begin(), sorted.end(), sigs[x]) - sorted.begin());
        }
        return out;
      }

      static std::size_t count_colors(std::vector<std::uint32_t> const& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
      }

      std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colors) {
        std::size_t cells = count_colors(colors);
        while (true) {
          auto next = rank(colors, [&](std::size_t x) {
            std::vector<std::uint32_t> s{colors[x]};
            for (std::size_t j = 0; j < _k; ++j) {
              s.push_back(colors[_maps[j * _m + x]]);
            }
            for (std::size_t j = 0; j < _k; ++j) {
              std::vector<std::uint32_t> pre;
              for (auto y : _preimages[j * _m + x]) {
                pre.push_back(colors[y]);
              }
              std::sort(pre.begin(), pre.end());
              s.push_back(static_cast<std::uint32_t>(pre.size()));
              s.insert(s.end(), pre.begin(), pre.end());
            }
            return s;
          });
          std::size_t const next_cells = count_colors(next);
          colors                       = std::move(next);
          if (next_cells == cells) {
            return colors;
          }
          cells = next_cells;
        }
      }

      void leaf(std::vector<std::uint32_t> const& colors) {
        CanonicalLabeling cand;
        cand.relabel.assign(colors.begin(), colors.end());
        cand.colors.assign(_m, 0);
        cand.maps.assign(_k * _m, 0);
        for (std::size_t x = 0; x < _m; ++x) {
          cand.colors[colors[x]] = _init[x];
          for (std::size_t j = 0; j < _k; ++j) {
            cand.maps[j * _m + colors[x]] = colors[_maps[j * _m + x]];
          }
        }
        if (!_have_best
            || std::tie(cand.colors, cand.maps) < std::tie(_best.colors, _best.maps)) {
          _best      = std::move(cand);
          _have_best = true;
        }
      }

      void search(std::vector<std::uint32_t> colors) {
        colors                  = refine(std::move(colors));
        std::size_t const cells = count_colors(colors);
        if (cells == _m) {
          leaf(colors);
          return;
        }
        std::vector<std::size_t> size(cells, 0);
        for (auto c : colors) {
          ++size[c];
        }
        std::uint32_t target = 0;
        while (size[target] == 1) {
          ++target;
        }
        for (std::size_t x = 0; x < _m; ++x) {
          if (colors[x] != target) {
            continue;
          }
          search(rank(colors, [&](std::size_t y) {
            return std::vector<std::uint32_t>{colors[y], y == x ? 0u : 1u};
          }));
        }
      }

      std::size_t                    _m;
      std::size_t                    _k;
      std::vector<Elem>              _maps;
      std::vector<std::uint32_t>     _init;
      std::vector<std::vector<Elem>> _preimages;
      CanonicalLabeling              _best;
      bool                           _have_best = false;
    };

  }  // namespace

  CanonicalLabeling canonical_labeling(std::size_t m, std::size_t k, std::span<Elem const> maps,
                                       std::span<std::uint32_t const> colors) {
    if (m == 0) {
      return {};
    }
    return Canonicalizer(m, k, maps, colors).run();
  }

}  // namespace kprime
