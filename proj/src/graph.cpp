#include "gdm/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "gdm/disjoint_sets.hpp"

namespace gdm {

namespace {

// Marks each index in `edges`, throwing on out-of-range or duplicates.
std::vector<unsigned char> edge_marks(const LabelledGraph& g, const std::vector<int>& edges,
                                      const char* what) {
  std::vector<unsigned char> mark(g.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument(std::string(what) + ": unknown edge index " + std::to_string(e));
    if (mark[e]) throw std::invalid_argument(std::string(what) + ": duplicate edge index " +
                                             std::to_string(e));
    mark[e] = 1;
  }
  return mark;
}

}  // namespace

LabelledGraph::LabelledGraph(GroupDescriptorPtr group, std::vector<VertexSpec> vertices,
                             std::vector<EdgeSpec> edges)
    : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("graph needs a group descriptor");
  const auto& slots = group_->slots();

  vertex_ids_.reserve(vertices.size());
  flat_labels_.reserve(vertices.size() * slots.size());
  label_nonzero_.reserve(vertices.size());
  for (auto& vs : vertices) {
    if (!same_group(vs.label.desc, group_))
      throw std::invalid_argument("label of vertex '" + vs.id + "' uses a different group");
    if (!vertex_index_.emplace(vs.id, static_cast<int>(vertex_ids_.size())).second)
      throw std::invalid_argument("duplicate vertex id '" + vs.id + "'");
    bool nz = !is_zero(vs.label);
    label_nonzero_.push_back(nz ? 1 : 0);
    flat_labels_.insert(flat_labels_.end(), vs.label.v.begin(), vs.label.v.end());
    vertex_ids_.push_back(std::move(vs.id));
  }

  edge_ids_.reserve(edges.size());
  for (auto& es : edges) {
    auto u = vertex_index_.find(es.u);
    auto v = vertex_index_.find(es.v);
    if (u == vertex_index_.end())
      throw std::invalid_argument("edge '" + es.id + "' references unknown vertex '" + es.u + "'");
    if (v == vertex_index_.end())
      throw std::invalid_argument("edge '" + es.id + "' references unknown vertex '" + es.v + "'");
    if (!edge_index_.emplace(es.id, static_cast<int>(edge_ids_.size())).second)
      throw std::invalid_argument("duplicate edge id '" + es.id + "'");
    edge_u_.push_back(u->second);
    edge_v_.push_back(v->second);
    edge_ids_.push_back(std::move(es.id));
  }

  // Components of the whole graph, numbered in first-seen vertex order.
  int n = vertex_count();
  DisjointSets uf(n);
  for (int e = 0; e < edge_count(); ++e) uf.unite(edge_u_[e], edge_v_[e]);
  full_comp_of_.assign(n, -1);
  std::vector<int> comp_of_root(n, -1);
  std::vector<unsigned char> comp_all_zero;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(full_comp_size_.size());
      full_comp_size_.push_back(0);
      comp_all_zero.push_back(1);
    }
    int c = comp_of_root[r];
    full_comp_of_[v] = c;
    ++full_comp_size_[c];
    if (label_nonzero_[v]) comp_all_zero[c] = 0;
  }
  for (unsigned char z : comp_all_zero) kappa_ += z;
}

int LabelledGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw std::invalid_argument("unknown vertex id '" + id + "'");
  return it->second;
}

int LabelledGraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw std::invalid_argument("unknown edge id '" + id + "'");
  return it->second;
}

GroupElement LabelledGraph::label(int v) const {
  int s = slot_count();
  std::vector<long long> vals(flat_labels_.begin() + static_cast<size_t>(v) * s,
                              flat_labels_.begin() + static_cast<size_t>(v + 1) * s);
  return GroupElement{group_, std::move(vals)};
}

int LabelledGraph::degree(int v) const {
  int d = 0;
  for (int e = 0; e < edge_count(); ++e) {
    if (edge_u_[e] == v) ++d;
    if (edge_v_[e] == v) ++d;
  }
  return d;
}

void check_edge_set(const LabelledGraph& g, const std::vector<int>& edges) {
  edge_marks(g, edges, "edge set");
}

std::vector<Component> components(const LabelledGraph& g) {
  std::vector<int> all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all[e] = e;
  return components(g, all);
}

std::vector<Component> components(const LabelledGraph& g, const std::vector<int>& restrict_to) {
  check_edge_set(g, restrict_to);
  DisjointSets uf(g.vertex_count());
  for (int e : restrict_to) uf.unite(g.edge_u(e), g.edge_v(e));

  std::vector<int> comp_of_root(g.vertex_count(), -1);
  std::vector<Component> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = uf.find(v);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[comp_of_root[r]].vertices.push_back(v);
  }
  for (int e : restrict_to) out[comp_of_root[uf.find(g.edge_u(e))]].edges.push_back(e);
  for (auto& c : out) std::sort(c.edges.begin(), c.edges.end());
  return out;
}

bool is_acyclic(const LabelledGraph& g, const std::vector<int>& edges) {
  check_edge_set(g, edges);
  DisjointSets uf(g.vertex_count());
  for (int e : edges) {
    if (!uf.unite(g.edge_u(e), g.edge_v(e))) return false;  // loop or closed path
  }
  return true;
}

bool is_gamma_nonzero(const LabelledGraph& g, const std::vector<int>& edges) {
  check_edge_set(g, edges);
  int n = g.vertex_count();
  int s = g.slot_count();
  const auto& slots = g.group()->slots();
  const auto& flat = g.flat_labels();

  DisjointSets uf(n);
  for (int e : edges) uf.unite(g.edge_u(e), g.edge_v(e));

  std::vector<long long> sums(static_cast<size_t>(n) * s, 0);
  std::vector<int> size(n, 0);
  std::vector<unsigned char> any_nonzero(n, 0);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    ++size[r];
    if (!g.label_is_zero(v)) any_nonzero[r] = 1;
    for (int i = 0; i < s; ++i)
      sums[static_cast<size_t>(r) * s + i] =
          slot_add(slots[i], sums[static_cast<size_t>(r) * s + i],
                   flat[static_cast<size_t>(v) * s + i]);
  }

  for (int v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    if (any_nonzero[v]) {
      bool sum_zero = true;
      for (int i = 0; i < s; ++i)
        if (sums[static_cast<size_t>(v) * s + i] != 0) {
          sum_zero = false;
          break;
        }
      if (sum_zero) return false;
    } else {
      // All labels zero: the component must span a whole component of g.
      if (size[v] != g.full_component_size(g.full_component_of(v))) return false;
    }
  }
  return true;
}

LabelledGraph delete_edges(const LabelledGraph& g, const std::vector<int>& edges) {
  auto mark = edge_marks(g, edges, "delete");
  std::vector<VertexSpec> vs;
  vs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vs.push_back({g.vertex_id(v), g.label(v)});
  std::vector<EdgeSpec> es;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!mark[e]) es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});
  return LabelledGraph(g.group(), std::move(vs), std::move(es));
}

LabelledGraph delete_edge(const LabelledGraph& g, int e) { return delete_edges(g, {e}); }

LabelledGraph contract_set(const LabelledGraph& g, const std::vector<int>& edges,
                           std::vector<int>* vertex_map) {
  auto mark = edge_marks(g, edges, "contract");
  int n = g.vertex_count();
  int s = g.slot_count();
  const auto& slots = g.group()->slots();
  const auto& flat = g.flat_labels();

  // Loops contract as deletions, so only non-loop edges merge classes.
  DisjointSets uf(n);
  for (int e : edges)
    if (!g.is_loop(e)) uf.unite(g.edge_u(e), g.edge_v(e));

  std::vector<int> new_index(n, -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (new_index[r] < 0) {
      new_index[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[new_index[r]].push_back(v);
  }

  // Singleton classes keep their id and label; merged classes get a fresh
  // id (sorted member ids joined by '+') and the class label sum.
  std::vector<VertexSpec> vs(members.size());
  std::unordered_map<std::string, int> taken;
  for (size_t c = 0; c < members.size(); ++c) {
    if (members[c].size() == 1) {
      vs[c] = {g.vertex_id(members[c][0]), g.label(members[c][0])};
      taken.emplace(vs[c].id, 1);
    }
  }
  for (size_t c = 0; c < members.size(); ++c) {
    if (members[c].size() == 1) continue;
    std::vector<std::string> ids;
    std::vector<long long> sum(s, 0);
    for (int v : members[c]) {
      ids.push_back(g.vertex_id(v));
      for (int i = 0; i < s; ++i)
        sum[i] = slot_add(slots[i], sum[i], flat[static_cast<size_t>(v) * s + i]);
    }
    std::sort(ids.begin(), ids.end());
    std::string id;
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) id += "+";
      id += ids[i];
    }
    while (!taken.emplace(id, 1).second) id += "+";
    vs[c] = {id, GroupElement{g.group(), std::move(sum)}};
  }

  std::vector<EdgeSpec> es;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (mark[e]) continue;
    int nu = new_index[uf.find(g.edge_u(e))];
    int nv = new_index[uf.find(g.edge_v(e))];
    es.push_back({g.edge_id(e), vs[nu].id, vs[nv].id});
  }

  if (vertex_map) {
    vertex_map->assign(n, -1);
    for (int v = 0; v < n; ++v) (*vertex_map)[v] = new_index[uf.find(v)];
  }
  return LabelledGraph(g.group(), std::move(vs), std::move(es));
}

LabelledGraph contract_edge(const LabelledGraph& g, int e, std::vector<int>* vertex_map) {
  return contract_set(g, {e}, vertex_map);
}

LabelledGraph delete_isolated_vertex(const LabelledGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("unknown vertex index " + std::to_string(v));
  if (g.degree(v) != 0)
    throw std::invalid_argument("vertex '" + g.vertex_id(v) + "' is not isolated");
  std::vector<VertexSpec> vs;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) vs.push_back({g.vertex_id(u), g.label(u)});
  std::vector<EdgeSpec> es;
  for (int e = 0; e < g.edge_count(); ++e)
    es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});
  return LabelledGraph(g.group(), std::move(vs), std::move(es));
}

int kappa_after(const LabelledGraph& g, const std::vector<int>& contracted,
                const std::vector<int>& removed) {
  auto cmark = edge_marks(g, contracted, "contract");
  auto rmark = edge_marks(g, removed, "remove");
  for (int e : removed)
    if (cmark[e])
      throw std::invalid_argument("edge " + std::to_string(e) + " both contracted and removed");

  int n = g.vertex_count();
  int s = g.slot_count();
  const auto& slots = g.group()->slots();
  const auto& flat = g.flat_labels();

  DisjointSets uf(n);
  for (int e : contracted)
    if (!g.is_loop(e)) uf.unite(g.edge_u(e), g.edge_v(e));

  // Per contraction class: summed label. Classes are the minor's vertices.
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = uf.find(v);
  std::vector<long long> sums(static_cast<size_t>(n) * s, 0);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < s; ++i)
      sums[static_cast<size_t>(cls[v]) * s + i] =
          slot_add(slots[i], sums[static_cast<size_t>(cls[v]) * s + i],
                   flat[static_cast<size_t>(v) * s + i]);

  for (int e = 0; e < g.edge_count(); ++e)
    if (!cmark[e] && !rmark[e]) uf.unite(g.edge_u(e), g.edge_v(e));

  std::vector<unsigned char> all_zero(n, 1);
  for (int v = 0; v < n; ++v) {
    if (cls[v] != v) continue;  // visit each class once
    bool zero = true;
    for (int i = 0; i < s; ++i)
      if (sums[static_cast<size_t>(v) * s + i] != 0) {
        zero = false;
        break;
      }
    if (!zero) all_zero[uf.find(v)] = 0;
  }

  int count = 0;
  std::vector<unsigned char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (seen[r]) continue;
    seen[r] = 1;
    if (all_zero[r]) ++count;
  }
  return count;
}

bool is_gamma_bridge(const LabelledGraph& g, int e) {
  if (e < 0 || e >= g.edge_count())
    throw std::invalid_argument("unknown edge index " + std::to_string(e));
  return kappa_after(g, {}, {e}) > g.kappa();
}

bool is_gamma_tunnel(const LabelledGraph& g, int e) {
  if (e < 0 || e >= g.edge_count())
    throw std::invalid_argument("unknown edge index " + std::to_string(e));
  if (g.is_loop(e)) return false;
  return kappa_after(g, {e}, {}) > g.kappa();
}

}  // namespace gdm
