#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gdm/group.hpp"

namespace gdm {

struct VertexSpec {
  std::string id;
  GroupElement label;
};

struct EdgeSpec {
  std::string id;
  std::string u, v;
};

struct Component {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Multigraph with a group label on every vertex. Loops and parallel edges
// are allowed. Immutable after construction; minor operations return new
// graphs. Edge ids survive minors unchanged; a contracted vertex class gets
// a fresh id and the class label sum.
class LabelledGraph {
 public:
  LabelledGraph(GroupDescriptorPtr group, std::vector<VertexSpec> vertices,
                std::vector<EdgeSpec> edges);

  const GroupDescriptorPtr& group() const { return group_; }
  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::string& edge_id(int e) const { return edge_ids_[e]; }
  int vertex_index(const std::string& id) const;  // throws on unknown id
  int edge_index(const std::string& id) const;    // throws on unknown id

  GroupElement label(int v) const;
  bool label_is_zero(int v) const { return label_nonzero_[v] == 0; }
  int edge_u(int e) const { return edge_u_[e]; }
  int edge_v(int e) const { return edge_v_[e]; }
  bool is_loop(int e) const { return edge_u_[e] == edge_v_[e]; }
  int degree(int v) const;  // loops count twice

  // Number of components of the whole graph whose labels are all zero.
  int kappa() const { return kappa_; }
  int full_component_of(int v) const { return full_comp_of_[v]; }
  int full_component_size(int c) const { return full_comp_size_[c]; }
  int full_component_count() const { return static_cast<int>(full_comp_size_.size()); }

  // Labels flattened per descriptor slot, row-major vertex x slot.
  const std::vector<long long>& flat_labels() const { return flat_labels_; }
  int slot_count() const { return static_cast<int>(group_->slots().size()); }

 private:
  GroupDescriptorPtr group_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<int> edge_u_, edge_v_;
  std::vector<long long> flat_labels_;
  std::vector<unsigned char> label_nonzero_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<int> full_comp_of_;
  std::vector<int> full_comp_size_;
  int kappa_ = 0;
};

// Validates that `edges` holds distinct, in-range edge indices.
void check_edge_set(const LabelledGraph& g, const std::vector<int>& edges);

std::vector<Component> components(const LabelledGraph& g);
std::vector<Component> components(const LabelledGraph& g, const std::vector<int>& restrict_to);

bool is_acyclic(const LabelledGraph& g, const std::vector<int>& edges);

// True iff every component of (V, edges) has nonzero label sum, or is
// entirely zero-labelled and spans a whole component of g.
bool is_gamma_nonzero(const LabelledGraph& g, const std::vector<int>& edges);

LabelledGraph delete_edge(const LabelledGraph& g, int e);
LabelledGraph delete_edges(const LabelledGraph& g, const std::vector<int>& edges);
LabelledGraph contract_edge(const LabelledGraph& g, int e, std::vector<int>* vertex_map = nullptr);
LabelledGraph contract_set(const LabelledGraph& g, const std::vector<int>& edges,
                           std::vector<int>* vertex_map = nullptr);
LabelledGraph delete_isolated_vertex(const LabelledGraph& g, int v);

bool is_gamma_bridge(const LabelledGraph& g, int e);
bool is_gamma_tunnel(const LabelledGraph& g, int e);

// kappa of the graph obtained by contracting `contracted` and deleting
// `removed`, computed with union-find and per-class label sums, without
// materializing the minor. The two sets must be disjoint.
int kappa_after(const LabelledGraph& g, const std::vector<int>& contracted,
                const std::vector<int>& removed);

}  // namespace gdm
