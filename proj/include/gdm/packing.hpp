#pragma once

#include <vector>

#include "gdm/graph.hpp"
#include "gdm/greedy.hpp"

namespace gdm {

struct PackedTree {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct PackingResult {
  std::vector<PackedTree> trees;
  std::vector<int> solution_edges;  // union of the tree edge sets
  Rational total;
};

// Maximum-weight packing of vertex-disjoint trees whose orders are not
// divisible by k. Labels of `structure` are ignored; internally every
// vertex gets label 1 over Z_k and the greedy solver runs on that graph.
// Every component of the solution, isolated vertices included, is reported
// as a tree (order 1 is never divisible by k >= 2).
PackingResult pack_trees_mod_k(const LabelledGraph& structure, long long k, const WeightMap& w);

// Maximum-weight packing of vertex-disjoint trees that each meet `s` and
// together cover every vertex. Labels of `structure` are ignored; vertices
// get the S-indicator over Z. Throws undefined_operation when some
// component of the graph has no vertex of s.
PackingResult pack_s_trees(const LabelledGraph& structure, const std::vector<int>& s,
                           const WeightMap& w);

}  // namespace gdm
