#include "gdm/separation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gdm/disjoint_sets.hpp"
#include "gdm/errors.hpp"

namespace gdm {

namespace {

void check_disjoint(const LabelledGraph& g, const std::vector<int>& keep,
                    const std::vector<int>& avoid) {
  std::vector<unsigned char> mark(g.edge_count(), 0);
  for (int e : keep) mark.at(e) = 1;
  for (int e : avoid)
    if (mark.at(e)) throw std::invalid_argument("edge '" + g.edge_id(e) +
                                                "' appears in both the kept and avoided sets");
}

}  // namespace

bool is_separable(const LabelledGraph& g, const std::vector<int>& keep,
                  const std::vector<int>& avoid) {
  check_edge_set(g, keep);
  check_edge_set(g, avoid);
  check_disjoint(g, keep, avoid);
  if (!is_acyclic(g, keep)) return false;  // no feasible set contains a cycle
  return kappa_after(g, keep, avoid) == g.kappa();
}

std::vector<int> extend_to_feasible(const LabelledGraph& g, const std::vector<int>& keep,
                                    const std::vector<int>& avoid) {
  if (!is_separable(g, keep, avoid))
    throw undefined_operation("no acyclic gamma-nonzero set separates the given pair");

  // Materialize the minor: contract the kept edges, delete the avoided ones.
  LabelledGraph h0 = contract_set(g, keep);
  std::vector<int> avoid_in_h0;
  avoid_in_h0.reserve(avoid.size());
  for (int e : avoid) avoid_in_h0.push_back(h0.edge_index(g.edge_id(e)));
  LabelledGraph h = delete_edges(h0, avoid_in_h0);

  // Spanning forest of h, one tree per component, edges taken in order.
  int n = h.vertex_count();
  DisjointSets uf(n);
  std::vector<int> forest;
  std::vector<int> parent_vertex(n, -1), parent_edge(n, -1);
  for (int e = 0; e < h.edge_count(); ++e)
    if (uf.unite(h.edge_u(e), h.edge_v(e))) forest.push_back(e);

  // Root each tree and orient parent pointers by BFS over forest edges.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
  for (int e : forest) {
    adj[h.edge_u(e)].push_back({h.edge_v(e), e});
    adj[h.edge_v(e)].push_back({h.edge_u(e), e});
  }
  std::vector<int> order;
  std::vector<unsigned char> visited(n, 0);
  std::vector<int> root_of(n, -1);
  for (int r = 0; r < n; ++r) {
    if (visited[r]) continue;
    std::vector<int> queue{r};
    visited[r] = 1;
    root_of[r] = r;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order.push_back(v);
      for (auto [w, e] : adj[v])
        if (!visited[w]) {
          visited[w] = 1;
          parent_vertex[w] = v;
          parent_edge[w] = e;
          root_of[w] = r;
          queue.push_back(w);
        }
    }
  }

  // Per vertex: nonzero-label count in its subtree (children before parents
  // in reverse BFS order).
  std::vector<int> nz_below(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (!h.label_is_zero(v)) ++nz_below[v];
    if (parent_vertex[v] >= 0) nz_below[parent_vertex[v]] += nz_below[v];
  }

  // Component totals: label sum and nonzero count per root.
  int s = h.slot_count();
  const auto& slots = h.group()->slots();
  const auto& flat = h.flat_labels();
  std::vector<long long> sums(static_cast<size_t>(n) * s, 0);
  std::vector<int> nz_total(n, 0);
  for (int v = 0; v < n; ++v) {
    int r = root_of[v];
    if (!h.label_is_zero(v)) ++nz_total[r];
    for (int i = 0; i < s; ++i)
      sums[static_cast<size_t>(r) * s + i] =
          slot_add(slots[i], sums[static_cast<size_t>(r) * s + i],
                   flat[static_cast<size_t>(v) * s + i]);
  }

  // A tree whose labels are not all zero but sum to zero loses one edge:
  // the smallest-index edge splitting off a side with exactly one nonzero
  // label. Both sides then have nonzero sum.
  std::vector<unsigned char> drop(h.edge_count(), 0);
  for (int r = 0; r < n; ++r) {
    if (root_of[r] != r || nz_total[r] == 0) continue;
    bool sum_zero = true;
    for (int i = 0; i < s; ++i)
      if (sums[static_cast<size_t>(r) * s + i] != 0) {
        sum_zero = false;
        break;
      }
    if (!sum_zero) continue;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (root_of[v] != r || parent_edge[v] < 0) continue;
      int below = nz_below[v];
      if (below == 1 || nz_total[r] - below == 1)
        if (best < 0 || parent_edge[v] < best) best = parent_edge[v];
    }
    assert(best >= 0);  // >= 2 nonzero labels, so a split edge exists
    drop[best] = 1;
  }

  std::vector<int> result = keep;
  for (int e : forest)
    if (!drop[e]) result.push_back(g.edge_index(h.edge_id(e)));
  std::sort(result.begin(), result.end());
  assert(is_acyclic(g, result) && is_gamma_nonzero(g, result));
  return result;
}

}  // namespace gdm
