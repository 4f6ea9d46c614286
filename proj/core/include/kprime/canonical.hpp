#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kprime/types.hpp"

namespace kprime {

  // Canonical relabeling of a pointed set carrying k self-maps.
  //
  // Colour refinement (a point's colour is refined by the colours of its
  // images and the multiset of colours of its preimages, map by map) followed
  // by individualisation of the first non-singleton cell, exploring every
  // branch. The canonical form is the lexicographically least relabelled
  // (colours, maps) pair over all leaves. Point 0 is the base point and always
  // keeps label 0.
  struct CanonicalLabeling {
    std::vector<Elem>          relabel;  // old label -> new label
    std::vector<std::uint32_t> colors;   // initial colour of each new label
    std::vector<Elem>          maps;     // k rows of m entries, relabelled
  };

  // `maps` holds k rows of m entries, row j giving the j-th self-map.
  // `colors` is an optional initial colouring (empty means uniform).
  CanonicalLabeling canonical_labeling(std::size_t                    m,
                                       std::size_t                    k,
                                       std::span<Elem const>          maps,
                                       std::span<std::uint32_t const> colors = {});

}  // namespace kprime
