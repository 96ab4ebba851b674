#pragma once

#include <vector>

#include "gdm/graph.hpp"
#include "gdm/rational.hpp"

namespace gdm {

// Exact rational weight per edge, indexed like the graph's edge list.
struct WeightMap {
  std::vector<Rational> value;
};

enum class GreedyBranch { KeptInX, ForcedToY, KeptInY, ForcedToX };
const char* to_string(GreedyBranch b);

struct GreedyDecision {
  int edge;
  GreedyBranch branch;
};

struct GreedyTrace {
  std::vector<GreedyDecision> decisions;  // one per edge, in processing order
};

struct SolveResult {
  std::vector<int> edges;  // a maximum-weight acyclic gamma-nonzero set
  Rational total;
  GreedyTrace trace;
};

// Symmetric greedy: edges in non-increasing |w| order (ties by edge index);
// a non-negative edge goes to X when (X+e, Y) separates, else to Y; a
// negative edge goes to Y when (X, Y+e) separates, else to X. Exactly one
// separation query per edge. X is feasible and maximizes the total weight.
SolveResult solve_max_weight(const LabelledGraph& g, const WeightMap& w);

}  // namespace gdm
