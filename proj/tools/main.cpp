#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "gdm/errors.hpp"
#include "gdm/greedy.hpp"
#include "gdm/json_io.hpp"
#include "gdm/packing.hpp"
#include "gdm/representation.hpp"
#include "gdm/separation.hpp"
#include "gdm/set_system.hpp"

namespace {

using gdm::Json;

std::vector<int> edge_indices(const gdm::LabelledGraph& g, const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& id : ids) {
    try {
      out.push_back(g.edge_index(id));
    } catch (const std::invalid_argument&) {
      throw gdm::malformed_input("unknown edge id \"" + id + "\"");
    }
  }
  return out;
}

std::string join_ids(const gdm::LabelledGraph& g, const std::vector<int>& edges) {
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += " ";
    s += g.edge_id(edges[i]);
  }
  return s;
}

Json edge_id_array(const gdm::LabelledGraph& g, const std::vector<int>& edges) {
  Json a = Json::array();
  for (int e : edges) a.push_back(g.edge_id(e));
  return a;
}

Json vertex_id_array(const gdm::LabelledGraph& g, const std::vector<int>& vertices) {
  Json a = Json::array();
  for (int v : vertices) a.push_back(g.vertex_id(v));
  return a;
}

void print_packing(const gdm::LabelledGraph& g, const gdm::PackingResult& res, bool as_json) {
  if (as_json) {
    Json j;
    Json trees = Json::array();
    for (const auto& t : res.trees) {
      Json jt;
      jt["vertices"] = vertex_id_array(g, t.vertices);
      jt["edges"] = edge_id_array(g, t.edges);
      trees.push_back(std::move(jt));
    }
    j["trees"] = std::move(trees);
    j["edges"] = edge_id_array(g, res.solution_edges);
    j["total"] = gdm::rational_to_json(res.total);
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (size_t i = 0; i < res.trees.size(); ++i) {
    const auto& t = res.trees[i];
    std::cout << "tree " << i + 1 << ": vertices";
    for (int v : t.vertices) std::cout << " " << g.vertex_id(v);
    std::cout << "; edges";
    if (t.edges.empty()) std::cout << " -";
    for (int e : t.edges) std::cout << " " << g.edge_id(e);
    std::cout << "\n";
  }
  std::cout << "total: " << res.total.to_string() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Maximum-weight acyclic gamma-nonzero edge sets in group-labelled "
               "graphs, with tree-packing frontends"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string graph_path, weights_path;
  bool with_trace = false;
  auto* solve = app.add_subcommand("solve", "maximum-weight acyclic gamma-nonzero set");
  solve->add_option("--graph", graph_path, "labelled graph file")->required();
  solve->add_option("--weights", weights_path, "weights file")->required();
  solve->add_flag("--trace", with_trace, "print the greedy decision log");

  std::vector<std::string> in_ids, out_ids;
  bool with_witness = false;
  auto* separate = app.add_subcommand("separate", "separation oracle query");
  separate->add_option("--graph", graph_path, "labelled graph file")->required();
  separate->add_option("--in", in_ids, "edge ids the feasible set must contain")->delimiter(',');
  separate->add_option("--out", out_ids, "edge ids the feasible set must avoid")->delimiter(',');
  separate->add_flag("--witness", with_witness, "print a witness feasible set");

  long long mod_k = 0;
  auto* pack_mod = app.add_subcommand("pack-mod-k", "pack trees of order not divisible by k");
  pack_mod->add_option("--graph", graph_path, "graph file (labels ignored)")->required();
  pack_mod->add_option("--k", mod_k, "forbidden order divisor")->required();
  pack_mod->add_option("--weights", weights_path, "weights file")->required();

  std::vector<std::string> s_ids;
  auto* pack_stree = app.add_subcommand("pack-stree", "pack S-trees covering every vertex");
  pack_stree->add_option("--graph", graph_path, "graph file (labels ignored)")->required();
  pack_stree->add_option("--s", s_ids, "terminal vertex ids")->delimiter(',')->required();
  pack_stree->add_option("--weights", weights_path, "weights file")->required();

  int cap = gdm::kDefaultEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "list all feasible sets (brute force)");
  enumerate->add_option("--graph", graph_path, "labelled graph file")->required();
  enumerate->add_option("--cap", cap, "enumeration cap on the edge count");

  auto* axioms =
      app.add_subcommand("check-axioms", "verify the symmetric exchange axiom by enumeration");
  axioms->add_option("--graph", graph_path, "labelled graph file")->required();
  axioms->add_option("--cap", cap, "enumeration cap on the edge count");

  long long rep_p = 0;
  int rep_ell = 0;
  bool rep_check = false;
  auto* represent =
      app.add_subcommand("represent", "symmetric matrix representation over GF(p^ell)");
  represent->add_option("--graph", graph_path, "Z_p^k-labelled graph file")->required();
  represent->add_option("--p", rep_p, "field characteristic")->required();
  represent->add_option("--ell", rep_ell, "field degree")->required();
  represent->add_flag("--check", rep_check,
                      "verify principal-minor feasibility against enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (solve->parsed()) {
    gdm::LabelledGraph g = gdm::graph_from_json(gdm::load_json_file(graph_path));
    gdm::WeightMap w = gdm::weights_from_json(gdm::load_json_file(weights_path), g);
    gdm::SolveResult res = gdm::solve_max_weight(g, w);
    if (as_json) {
      Json j;
      j["edges"] = edge_id_array(g, res.edges);
      j["total"] = gdm::rational_to_json(res.total);
      if (with_trace) {
        Json t = Json::array();
        for (const auto& d : res.trace.decisions) {
          Json jd;
          jd["edge"] = g.edge_id(d.edge);
          jd["branch"] = gdm::to_string(d.branch);
          t.push_back(std::move(jd));
        }
        j["trace"] = std::move(t);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "edges: " << join_ids(g, res.edges) << "\n";
      std::cout << "total: " << res.total.to_string() << "\n";
      if (with_trace)
        for (const auto& d : res.trace.decisions)
          std::cout << g.edge_id(d.edge) << " -> " << gdm::to_string(d.branch) << "\n";
    }
    return 0;
  }

  if (separate->parsed()) {
    gdm::LabelledGraph g = gdm::graph_from_json(gdm::load_json_file(graph_path));
    std::vector<int> keep = edge_indices(g, in_ids);
    std::vector<int> avoid = edge_indices(g, out_ids);
    bool ok;
    try {
      ok = gdm::is_separable(g, keep, avoid);
    } catch (const std::invalid_argument& e) {
      throw gdm::malformed_input(e.what());
    }
    if (as_json) {
      Json j;
      j["separable"] = ok;
      if (ok && with_witness)
        j["witness"] = edge_id_array(g, gdm::extend_to_feasible(g, keep, avoid));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "separable: " << (ok ? "true" : "false") << "\n";
      if (ok && with_witness)
        std::cout << "witness: " << join_ids(g, gdm::extend_to_feasible(g, keep, avoid)) << "\n";
    }
    return 0;
  }

  if (pack_mod->parsed() || pack_stree->parsed()) {
    gdm::LabelledGraph g = gdm::structure_graph_from_json(gdm::load_json_file(graph_path));
    gdm::WeightMap w = gdm::weights_from_json(gdm::load_json_file(weights_path), g);
    gdm::PackingResult res;
    if (pack_mod->parsed()) {
      if (mod_k < 2) throw gdm::malformed_input("--k must be at least 2");
      res = gdm::pack_trees_mod_k(g, mod_k, w);
    } else {
      std::vector<int> s;
      for (const auto& id : s_ids) {
        try {
          s.push_back(g.vertex_index(id));
        } catch (const std::invalid_argument&) {
          throw gdm::malformed_input("unknown vertex id \"" + id + "\"");
        }
      }
      res = gdm::pack_s_trees(g, s, w);
    }
    print_packing(g, res, as_json);
    return 0;
  }

  if (enumerate->parsed() || axioms->parsed()) {
    gdm::LabelledGraph g = gdm::graph_from_json(gdm::load_json_file(graph_path));
    gdm::SetSystem m = gdm::enumerate_gamma_graphic(g, cap);
    if (enumerate->parsed()) {
      if (as_json) {
        Json j;
        j["ground"] = m.ground;
        Json fs = Json::array();
        for (std::uint64_t f : m.feasible) fs.push_back(m.ids_of(f));
        j["feasible"] = std::move(fs);
        j["count"] = m.feasible.size();
        std::cout << j.dump(2) << "\n";
      } else {
        for (std::uint64_t f : m.feasible) {
          auto ids = m.ids_of(f);
          std::cout << "{";
          for (size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << ids[i];
          std::cout << "}\n";
        }
        std::cout << "count: " << m.feasible.size() << "\n";
      }
      return 0;
    }
    auto violation = gdm::check_exchange_axiom(m);
    if (as_json) {
      Json j;
      j["delta_matroid"] = !violation.has_value();
      if (violation) {
        j["x"] = m.ids_of(violation->x);
        j["y"] = m.ids_of(violation->y);
        j["e"] = m.ground[violation->element];
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "delta-matroid: " << (violation ? "no" : "yes") << "\n";
      if (violation) {
        auto xs = m.ids_of(violation->x);
        auto ys = m.ids_of(violation->y);
        std::cout << "violation: X={";
        for (size_t i = 0; i < xs.size(); ++i) std::cout << (i ? "," : "") << xs[i];
        std::cout << "} Y={";
        for (size_t i = 0; i < ys.size(); ++i) std::cout << (i ? "," : "") << ys[i];
        std::cout << "} e=" << m.ground[violation->element] << "\n";
      }
    }
    return violation ? 1 : 0;
  }

  if (represent->parsed()) {
    gdm::LabelledGraph g = gdm::graph_from_json(gdm::load_json_file(graph_path));
    gdm::GaloisField field(rep_p, rep_ell);

    std::vector<int> pendants;
    bool has_zero_label = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.label_is_zero(v)) {
        has_zero_label = true;
        break;
      }
    if (has_zero_label) {
      gdm::GadgetResult gr = gdm::nonzero_gadget(g);
      pendants = gr.contracted;
      g = std::move(gr.graph);
    }

    const auto& d = *g.group();
    int k = d.kind() == gdm::GroupKind::VectorMod ? d.dimension() : 1;
    if (k > field.degree())
      throw gdm::undefined_operation("field degree " + std::to_string(field.degree()) +
                                     " is smaller than the label dimension " + std::to_string(k));
    gdm::Homomorphism phi = gdm::Homomorphism::power_basis(field, k);
    gdm::FieldMatrix rep = gdm::build_representation(g, field, phi);

    bool check_ok = true;
    if (rep_check) {
      gdm::SetSystem m = gdm::enumerate_gamma_graphic(g);
      std::vector<unsigned char> feasible(1ull << g.edge_count(), 0);
      for (std::uint64_t f : m.feasible) feasible[f] = 1;
      for (std::uint64_t mask = 0; mask < (1ull << g.edge_count()); ++mask) {
        std::vector<int> idx;
        for (int e = 0; e < g.edge_count(); ++e)
          if (mask >> e & 1) idx.push_back(e);
        if (gdm::feasible_by_minor(field, rep, idx) != (feasible[mask] != 0)) {
          check_ok = false;
          break;
        }
      }
    }

    if (as_json) {
      Json j;
      j["field"] = Json{{"p", rep_p}, {"ell", rep_ell}, {"modulus", field.modulus()}};
      Json images = Json::array();
      for (auto a : phi.images) images.push_back(field.coeffs(a));
      j["phi"] = std::move(images);
      if (has_zero_label) j["gadget_edges"] = edge_id_array(g, pendants);
      j["edges"] = rep.col_ids;
      Json rows = Json::array();
      for (int i = 0; i < rep.rows; ++i) {
        Json row = Json::array();
        for (int c = 0; c < rep.cols; ++c) row.push_back(field.coeffs(rep.at(i, c)));
        rows.push_back(std::move(row));
      }
      j["matrix"] = std::move(rows);
      if (rep_check) j["check"] = check_ok ? "feasibility matches enumeration" : "MISMATCH";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "field: GF(" << rep_p << "^" << rep_ell << "), modulus coefficients "
                << Json(field.modulus()).dump() << " (x^" << rep_ell << " monic)\n";
      if (has_zero_label)
        std::cout << "pendant gadget applied; added edges: " << join_ids(g, pendants) << "\n";
      std::cout << "edges:";
      for (const auto& id : rep.col_ids) std::cout << " " << id;
      std::cout << "\n";
      for (int i = 0; i < rep.rows; ++i) {
        for (int c = 0; c < rep.cols; ++c)
          std::cout << (c ? " " : "") << Json(field.coeffs(rep.at(i, c))).dump();
        std::cout << "\n";
      }
      if (rep_check)
        std::cout << "check: " << (check_ok ? "feasibility matches enumeration" : "MISMATCH")
                  << "\n";
    }
    return check_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gdm::malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gdm::undefined_operation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
