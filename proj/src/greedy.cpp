#include "gdm/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gdm/separation.hpp"

namespace gdm {

const char* to_string(GreedyBranch b) {
  switch (b) {
    case GreedyBranch::KeptInX:
      return "kept-in-X";
    case GreedyBranch::ForcedToY:
      return "forced-to-Y";
    case GreedyBranch::KeptInY:
      return "kept-in-Y";
    case GreedyBranch::ForcedToX:
      return "forced-to-X";
  }
  return "?";
}

SolveResult solve_max_weight(const LabelledGraph& g, const WeightMap& w) {
  int m = g.edge_count();
  if (static_cast<int>(w.value.size()) != m)
    throw std::invalid_argument("weight map covers " + std::to_string(w.value.size()) +
                                " edges, graph has " + std::to_string(m));

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return abs_less(w.value[b], w.value[a]);  // |w| descending, index ascending
  });

  SolveResult res;
  std::vector<int> x, y;
  res.trace.decisions.reserve(m);
  for (int e : order) {
    if (!w.value[e].is_negative()) {
      x.push_back(e);
      if (is_separable(g, x, y)) {
        res.trace.decisions.push_back({e, GreedyBranch::KeptInX});
      } else {
        x.pop_back();
        y.push_back(e);
        res.trace.decisions.push_back({e, GreedyBranch::ForcedToY});
      }
    } else {
      y.push_back(e);
      if (is_separable(g, x, y)) {
        res.trace.decisions.push_back({e, GreedyBranch::KeptInY});
      } else {
        y.pop_back();
        x.push_back(e);
        res.trace.decisions.push_back({e, GreedyBranch::ForcedToX});
      }
    }
  }

  std::sort(x.begin(), x.end());
  res.total = Rational(0);
  for (int e : x) res.total = res.total + w.value[e];
  res.edges = std::move(x);
  return res;
}

}  // namespace gdm
