#include "gdm/json_io.hpp"

#include <fstream>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

long long expect_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw malformed_input(where + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw malformed_input(where + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

const Json& expect_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw malformed_input(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw malformed_input(where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed_input(path + ": " + e.what());
  }
}

GroupDescriptorPtr group_from_json(const Json& j) {
  std::string kind = expect_string(expect_field(j, "group", "group descriptor"), "group.group");
  try {
    if (kind == "Z") return GroupDescriptor::integers();
    if (kind == "Zk") return GroupDescriptor::cyclic(expect_integer(expect_field(j, "k", "group"), "group.k"));
    if (kind == "Zpk")
      return GroupDescriptor::vector_mod(
          expect_integer(expect_field(j, "p", "group"), "group.p"),
          static_cast<int>(expect_integer(expect_field(j, "k", "group"), "group.k")));
    if (kind == "product") {
      const Json& factors = expect_field(j, "factors", "group");
      if (!factors.is_array()) throw malformed_input("group.factors: expected an array");
      std::vector<GroupDescriptorPtr> fs;
      for (const auto& f : factors) fs.push_back(group_from_json(f));
      return GroupDescriptor::product(std::move(fs));
    }
  } catch (const std::invalid_argument& e) {
    throw malformed_input(std::string("group descriptor: ") + e.what());
  }
  throw malformed_input("group.group: unknown kind \"" + kind +
                        "\" (expected Z, Zk, Zpk or product)");
}

Json group_to_json(const GroupDescriptor& d) {
  Json j;
  switch (d.kind()) {
    case GroupKind::Integers:
      j["group"] = "Z";
      break;
    case GroupKind::CyclicMod:
      j["group"] = "Zk";
      j["k"] = d.modulus();
      break;
    case GroupKind::VectorMod:
      j["group"] = "Zpk";
      j["p"] = d.prime();
      j["k"] = d.dimension();
      break;
    case GroupKind::Product: {
      j["group"] = "product";
      Json fs = Json::array();
      for (const auto& f : d.factors()) fs.push_back(group_to_json(*f));
      j["factors"] = std::move(fs);
      break;
    }
  }
  return j;
}

GroupElement element_from_json(const Json& j, const GroupDescriptorPtr& desc,
                               const std::string& where) {
  size_t slots = desc->slots().size();
  std::vector<long long> raw;
  if (j.is_number_integer()) {
    if (slots != 1)
      throw malformed_input(where + ": group " + desc->to_string() + " needs an array of " +
                            std::to_string(slots) + " integers");
    raw.push_back(j.get<long long>());
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      raw.push_back(expect_integer(j[i], where + "[" + std::to_string(i) + "]"));
  } else {
    throw malformed_input(where + ": expected an integer or an array of integers");
  }
  try {
    return make_element(desc, std::move(raw));
  } catch (const std::invalid_argument& e) {
    throw malformed_input(where + ": " + e.what());
  }
}

Json element_to_json(const GroupElement& e) {
  const auto& k = e.desc->kind();
  if (k == GroupKind::Integers || k == GroupKind::CyclicMod) return Json(e.v[0]);
  return Json(e.v);
}

namespace {

LabelledGraph graph_from_json_impl(const Json& j, bool require_labels) {
  GroupDescriptorPtr desc;
  if (j.contains("group"))
    desc = group_from_json(j.at("group"));
  else if (require_labels)
    throw malformed_input("graph: missing field \"group\"");
  else
    desc = GroupDescriptor::cyclic(2);

  const Json& vertices = expect_field(j, "vertices", "graph");
  const Json& edges = expect_field(j, "edges", "graph");
  if (!vertices.is_array()) throw malformed_input("graph.vertices: expected an array");
  if (!edges.is_array()) throw malformed_input("graph.edges: expected an array");

  std::vector<VertexSpec> vs;
  for (size_t i = 0; i < vertices.size(); ++i) {
    std::string where = "vertices[" + std::to_string(i) + "]";
    const Json& v = vertices[i];
    std::string id = expect_string(expect_field(v, "id", where), where + ".id");
    GroupElement label = zero(desc);
    if (v.contains("label"))
      label = element_from_json(v.at("label"), desc, where + ".label");
    else if (require_labels && j.contains("group"))
      throw malformed_input(where + ": missing field \"label\"");
    vs.push_back({std::move(id), std::move(label)});
  }

  std::vector<EdgeSpec> es;
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    es.push_back({expect_string(expect_field(e, "id", where), where + ".id"),
                  expect_string(expect_field(e, "u", where), where + ".u"),
                  expect_string(expect_field(e, "v", where), where + ".v")});
  }

  try {
    return LabelledGraph(std::move(desc), std::move(vs), std::move(es));
  } catch (const std::invalid_argument& e) {
    throw malformed_input(std::string("graph: ") + e.what());
  }
}

}  // namespace

LabelledGraph graph_from_json(const Json& j) { return graph_from_json_impl(j, true); }

LabelledGraph structure_graph_from_json(const Json& j) { return graph_from_json_impl(j, false); }

Json graph_to_json(const LabelledGraph& g) {
  Json j;
  j["group"] = group_to_json(*g.group());
  Json vs = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json jv;
    jv["id"] = g.vertex_id(v);
    jv["label"] = element_to_json(g.label(v));
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    Json je;
    je["id"] = g.edge_id(e);
    je["u"] = g.vertex_id(g.edge_u(e));
    je["v"] = g.vertex_id(g.edge_v(e));
    es.push_back(std::move(je));
  }
  j["edges"] = std::move(es);
  return j;
}

WeightMap weights_from_json(const Json& j, const LabelledGraph& g) {
  if (!j.is_object()) throw malformed_input("weights: expected an object keyed by edge id");
  WeightMap w;
  w.value.assign(g.edge_count(), Rational(0));
  std::vector<unsigned char> seen(g.edge_count(), 0);
  for (const auto& [key, val] : j.items()) {
    int e;
    try {
      e = g.edge_index(key);
    } catch (const std::invalid_argument&) {
      throw malformed_input("weights: unknown edge id \"" + key + "\"");
    }
    if (seen[e]) throw malformed_input("weights: duplicate entry for edge \"" + key + "\"");
    seen[e] = 1;
    if (val.is_number_integer()) {
      w.value[e] = Rational(val.get<long long>());
    } else if (val.is_object()) {
      long long num = expect_integer(expect_field(val, "num", "weights." + key),
                                     "weights." + key + ".num");
      long long den = expect_integer(expect_field(val, "den", "weights." + key),
                                     "weights." + key + ".den");
      if (den == 0) throw malformed_input("weights." + key + ": zero denominator");
      w.value[e] = Rational::fraction(num, den);
    } else {
      throw malformed_input("weights." + key + ": expected an integer or {\"num\",\"den\"}");
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!seen[e]) throw malformed_input("weights: no entry for edge \"" + g.edge_id(e) + "\"");
  return w;
}

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

}  // namespace gdm
