#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace kprime::detail {

  // Union-find whose representative is always the least member of a class.
  struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (y < x) {
        std::swap(x, y);
      }
      parent[y] = x;
      return true;
    }
    std::vector<std::size_t> parent;
  };

}  // namespace kprime::detail
