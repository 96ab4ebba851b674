#include "gdm/packing.hpp"

#include <algorithm>
#include <stdexcept>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

LabelledGraph relabel(const LabelledGraph& g, const GroupDescriptorPtr& desc,
                      const std::vector<GroupElement>& labels) {
  std::vector<VertexSpec> vs;
  vs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vs.push_back({g.vertex_id(v), labels[v]});
  std::vector<EdgeSpec> es;
  es.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});
  return LabelledGraph(desc, std::move(vs), std::move(es));
}

PackingResult decode(const LabelledGraph& labelled, SolveResult&& sol) {
  PackingResult out;
  for (auto& c : components(labelled, sol.edges))
    out.trees.push_back({std::move(c.vertices), std::move(c.edges)});
  out.solution_edges = std::move(sol.edges);
  out.total = sol.total;
  return out;
}

}  // namespace

PackingResult pack_trees_mod_k(const LabelledGraph& structure, long long k, const WeightMap& w) {
  if (k < 2) throw std::invalid_argument("modulus k must be at least 2");
  auto desc = GroupDescriptor::cyclic(k);
  std::vector<GroupElement> ones(structure.vertex_count(), make_element(desc, {1}));
  LabelledGraph labelled = relabel(structure, desc, ones);
  return decode(labelled, solve_max_weight(labelled, w));
}

PackingResult pack_s_trees(const LabelledGraph& structure, const std::vector<int>& s,
                           const WeightMap& w) {
  if (s.empty()) throw std::invalid_argument("terminal set must be non-empty");
  std::vector<unsigned char> in_s(structure.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= structure.vertex_count())
      throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    in_s[v] = 1;
  }
  std::vector<unsigned char> comp_hit(structure.full_component_count(), 0);
  for (int v = 0; v < structure.vertex_count(); ++v)
    if (in_s[v]) comp_hit[structure.full_component_of(v)] = 1;
  for (int v = 0; v < structure.vertex_count(); ++v)
    if (!comp_hit[structure.full_component_of(v)])
      throw undefined_operation("component containing vertex '" + structure.vertex_id(v) +
                                "' has no terminal vertex");

  auto desc = GroupDescriptor::integers();
  std::vector<GroupElement> labels;
  labels.reserve(structure.vertex_count());
  for (int v = 0; v < structure.vertex_count(); ++v)
    labels.push_back(make_element(desc, {in_s[v] ? 1ll : 0ll}));
  LabelledGraph labelled = relabel(structure, desc, labels);
  return decode(labelled, solve_max_weight(labelled, w));
}

}  // namespace gdm
