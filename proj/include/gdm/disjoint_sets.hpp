#pragma once

#include <numeric>
#include <vector>

namespace gdm {

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  // Returns false if x and y were already in the same set.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    return true;
  }
};

}  // namespace gdm
