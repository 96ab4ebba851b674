#pragma once

#include <json.hpp>

#include <string>

#include "gdm/graph.hpp"
#include "gdm/greedy.hpp"

namespace gdm {

using Json = nlohmann::ordered_json;

// Loads and parses a JSON file; throws malformed_input with the file name
// and parser position on failure.
Json load_json_file(const std::string& path);

// {"group":"Z"} | {"group":"Zk","k":3} | {"group":"Zpk","p":2,"k":2} |
// {"group":"product","factors":[...]}
GroupDescriptorPtr group_from_json(const Json& j);
Json group_to_json(const GroupDescriptor& d);

// Labels: a plain integer for Z and Z_k, an array of integers (one per
// flattened slot) for Z_p^k and products.
GroupElement element_from_json(const Json& j, const GroupDescriptorPtr& desc,
                               const std::string& where);
Json element_to_json(const GroupElement& e);

// {"group": ..., "vertices": [{"id","label"},...], "edges": [{"id","u","v"},...]}
LabelledGraph graph_from_json(const Json& j);
// Accepts the same format with "group" (and labels) optional; missing labels
// become zero over Z_2. For the packing frontends, which relabel anyway.
LabelledGraph structure_graph_from_json(const Json& j);
Json graph_to_json(const LabelledGraph& g);

// {"e1": 5, "e2": {"num":1,"den":2}, ...}; must cover every edge exactly.
WeightMap weights_from_json(const Json& j, const LabelledGraph& g);

Json rational_to_json(const Rational& r);

}  // namespace gdm
