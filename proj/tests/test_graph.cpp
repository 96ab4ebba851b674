#include <doctest.h>

#include <algorithm>

#include "gdm/graph.hpp"
#include "gdm/set_system.hpp"
#include "test_support.hpp"

using namespace gdm;

namespace {

// P_4 with all-ones labels over Z_2: v1-v2-v3-v4.
LabelledGraph make_p4() {
  auto z2 = GroupDescriptor::cyclic(2);
  auto one = make_element(z2, {1});
  return LabelledGraph(z2,
                       {{"v1", one}, {"v2", one}, {"v3", one}, {"v4", one}},
                       {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}});
}

// K_{2,3} with all-ones labels over Z_2, edges named 1..6.
LabelledGraph make_k23() {
  auto z2 = GroupDescriptor::cyclic(2);
  auto one = make_element(z2, {1});
  return LabelledGraph(z2,
                       {{"u1", one}, {"u2", one}, {"w1", one}, {"w2", one}, {"w3", one}},
                       {{"1", "u1", "w1"},
                        {"2", "u1", "w2"},
                        {"3", "u1", "w3"},
                        {"4", "u2", "w1"},
                        {"5", "u2", "w2"},
                        {"6", "u2", "w3"}});
}

}  // namespace

TEST_CASE("components of a restricted edge set") {
  auto g = make_p4();
  auto comps = components(g, {g.edge_index("e1")});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].vertices == std::vector<int>{0, 1});
  CHECK(comps[1].vertices == std::vector<int>{2});
  CHECK(comps[2].vertices == std::vector<int>{3});

  auto singletons = components(g, {});
  CHECK(singletons.size() == 4);

  auto k23 = make_k23();
  CHECK(components(k23).size() == 1);
  CHECK(components(k23)[0].vertices.size() == 5);

  CHECK_THROWS_AS(components(g, {99}), std::invalid_argument);
}

TEST_CASE("is_acyclic") {
  auto g = make_p4();
  CHECK(is_acyclic(g, {}));

  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph loop(z2, {{"v", make_element(z2, {1})}}, {{"e", "v", "v"}});
  CHECK_FALSE(is_acyclic(loop, {0}));

  auto k23 = make_k23();
  CHECK_FALSE(is_acyclic(k23, {0, 1, 3, 4}));  // edges 1,2,4,5 form a 4-cycle
  CHECK(is_acyclic(k23, {0, 1, 2, 3}));
}

TEST_CASE("kappa counts all-zero components") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph single(z2, {{"v", zero(z2)}}, {});
  CHECK(single.kappa() == 1);

  CHECK(make_k23().kappa() == 0);

  LabelledGraph two(z2, {{"a", zero(z2)}, {"b", zero(z2)}, {"c", make_element(z2, {1})}},
                    {{"e1", "a", "b"}});
  CHECK(two.kappa() == 1);
}

TEST_CASE("is_gamma_nonzero on the path") {
  auto g = make_p4();
  CHECK(is_gamma_nonzero(g, {0, 1}));         // orders 3 and 1
  CHECK_FALSE(is_gamma_nonzero(g, {0, 1, 2}));  // order 4, sum 0 mod 2
}

TEST_CASE("all-zero component must be spanned") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2, {{"a", zero(z2)}, {"b", zero(z2)}, {"c", zero(z2)}},
                  {{"e1", "a", "b"}, {"e2", "b", "c"}});
  CHECK(is_gamma_nonzero(g, {0, 1}));   // spanning tree of the component
  CHECK_FALSE(is_gamma_nonzero(g, {0}));  // leaves {c} unspanned
  CHECK_FALSE(is_gamma_nonzero(g, {}));
}

TEST_CASE("delete_edge basics") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2, {{"a", make_element(z2, {1})}, {"b", make_element(z2, {1})}},
                  {{"loop", "a", "a"}, {"p1", "a", "b"}, {"p2", "a", "b"}});
  auto h = delete_edge(g, 0);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 2);
  auto h2 = delete_edge(g, 1);
  CHECK(h2.edge_count() == 2);
  CHECK(h2.edge_index("p2") == 1);
  CHECK_THROWS_AS(delete_edge(g, 7), std::invalid_argument);
}

TEST_CASE("deleting a gamma-bridge increases kappa") {
  // Zero-labelled blob attached to a nonzero vertex by one edge.
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2,
                  {{"z1", zero(z2)}, {"z2", zero(z2)}, {"n", make_element(z2, {1})}},
                  {{"b", "z1", "z2"}, {"e", "z2", "n"}});
  CHECK(is_gamma_bridge(g, 1));
  CHECK(delete_edge(g, 1).kappa() > g.kappa());
  // deleting b isolates the zero-labelled z1, so b is a bridge as well
  CHECK(is_gamma_bridge(g, 0));

  LabelledGraph h(z2, {{"a", make_element(z2, {1})}, {"b", make_element(z2, {1})}},
                  {{"e", "a", "b"}});
  CHECK_FALSE(is_gamma_bridge(h, 0));  // both sides keep a nonzero label
}

TEST_CASE("contract_edge merges labels") {
  auto z3 = GroupDescriptor::cyclic(3);
  LabelledGraph g(z3, {{"a", make_element(z3, {1})}, {"b", make_element(z3, {2})}},
                  {{"e", "a", "b"}});
  auto h = contract_edge(g, 0);
  CHECK(h.vertex_count() == 1);
  CHECK(h.edge_count() == 0);
  CHECK(h.label_is_zero(0));
}

TEST_CASE("contracting a loop deletes it") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2, {{"a", make_element(z2, {1})}}, {{"l", "a", "a"}});
  auto h = contract_edge(g, 0);
  CHECK(h.vertex_count() == 1);
  CHECK(h.edge_count() == 0);
  CHECK_FALSE(h.label_is_zero(0));
}

TEST_CASE("edge parallel to a contracted edge becomes a loop") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2, {{"a", make_element(z2, {1})}, {"b", make_element(z2, {1})}},
                  {{"p1", "a", "b"}, {"p2", "a", "b"}});
  auto h = contract_edge(g, 0);
  CHECK(h.edge_count() == 1);
  CHECK(h.is_loop(0));
}

TEST_CASE("contracting a gamma-tunnel increases kappa") {
  auto z3 = GroupDescriptor::cyclic(3);
  LabelledGraph g(z3, {{"a", make_element(z3, {1})}, {"b", make_element(z3, {2})}},
                  {{"e", "a", "b"}});
  CHECK(is_gamma_tunnel(g, 0));
  CHECK(contract_edge(g, 0).kappa() > g.kappa());
}

TEST_CASE("tunnel conditions") {
  auto z3 = GroupDescriptor::cyclic(3);
  // sum of endpoint labels nonzero: not a tunnel
  LabelledGraph g1(z3, {{"a", make_element(z3, {1})}, {"b", make_element(z3, {1})}},
                   {{"e", "a", "b"}});
  CHECK_FALSE(is_gamma_tunnel(g1, 0));
  // third nonzero label in the component: not a tunnel
  LabelledGraph g2(z3,
                   {{"a", make_element(z3, {1})},
                    {"b", make_element(z3, {2})},
                    {"c", make_element(z3, {1})}},
                   {{"e", "a", "b"}, {"f", "b", "c"}});
  CHECK_FALSE(is_gamma_tunnel(g2, 0));
  // loops are never tunnels
  LabelledGraph g3(z3, {{"a", make_element(z3, {1})}}, {{"l", "a", "a"}});
  CHECK_FALSE(is_gamma_tunnel(g3, 0));
}

TEST_CASE("loops are never bridges") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2, {{"a", zero(z2)}}, {{"l", "a", "a"}});
  CHECK_FALSE(is_gamma_bridge(g, 0));
}

TEST_CASE("no edge of an all-nonzero K23 is a bridge") {
  auto g = make_k23();
  for (int e = 0; e < g.edge_count(); ++e) CHECK_FALSE(is_gamma_bridge(g, e));
}

TEST_CASE("contract_set basics") {
  auto z5 = GroupDescriptor::cyclic(5);
  LabelledGraph p3(z5,
                   {{"a", make_element(z5, {1})},
                    {"b", make_element(z5, {2})},
                    {"c", make_element(z5, {3})}},
                   {{"e1", "a", "b"}, {"e2", "b", "c"}});
  auto all = contract_set(p3, {0, 1});
  CHECK(all.vertex_count() == 1);
  CHECK(all.label(0) == make_element(z5, {1 + 2 + 3}));

  auto same = contract_set(p3, {});
  CHECK(same.vertex_count() == 3);
  CHECK(same.edge_count() == 2);
}

TEST_CASE("contract_set is order independent") {
  gdmtest::Rng rng(4711);
  auto z4 = GroupDescriptor::cyclic(4);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gdmtest::random_graph(rng, z4, 6, 7);
    // pick a random acyclic subset
    std::vector<int> acyclic;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!gdmtest::chance(rng, 0.5)) continue;
      acyclic.push_back(e);
      if (!is_acyclic(g, acyclic)) acyclic.pop_back();
    }
    auto shuffled = acyclic;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[gdmtest::pick(rng, static_cast<int>(i))]);

    auto h1 = contract_set(g, acyclic);
    auto h2 = contract_set(g, shuffled);
    REQUIRE(h1.vertex_count() == h2.vertex_count());
    REQUIRE(h1.edge_count() == h2.edge_count());
    for (int v = 0; v < h1.vertex_count(); ++v) {
      CHECK(h1.vertex_id(v) == h2.vertex_id(v));
      CHECK(h1.label(v) == h2.label(v));
    }
    for (int e = 0; e < h1.edge_count(); ++e) {
      CHECK(h1.edge_id(e) == h2.edge_id(e));
      CHECK(h1.edge_u(e) == h2.edge_u(e));
      CHECK(h1.edge_v(e) == h2.edge_v(e));
    }
  }
}

TEST_CASE("contract trace maps old vertices to classes") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph g(z2,
                  {{"a", make_element(z2, {1})},
                   {"b", make_element(z2, {1})},
                   {"c", make_element(z2, {1})}},
                  {{"e1", "a", "b"}, {"e2", "b", "c"}});
  std::vector<int> vmap;
  auto h = contract_edge(g, 0, &vmap);
  REQUIRE(vmap.size() == 3);
  CHECK(vmap[0] == vmap[1]);
  CHECK(vmap[0] != vmap[2]);
  CHECK(h.vertex_id(vmap[0]) == "a+b");
}

TEST_CASE("delete_isolated_vertex") {
  auto z2 = GroupDescriptor::cyclic(2);
  LabelledGraph single(z2, {{"v", zero(z2)}}, {});
  auto empty = delete_isolated_vertex(single, 0);
  CHECK(empty.vertex_count() == 0);
  CHECK(single.kappa() - empty.kappa() == 1);

  LabelledGraph g(z2, {{"a", make_element(z2, {1})}, {"b", make_element(z2, {1})}},
                  {{"e", "a", "b"}});
  CHECK_THROWS_AS(delete_isolated_vertex(g, 0), std::invalid_argument);

  LabelledGraph looped(z2, {{"a", make_element(z2, {1})}}, {{"l", "a", "a"}});
  CHECK_THROWS_AS(delete_isolated_vertex(looped, 0), std::invalid_argument);
}

TEST_CASE("deleting an isolated vertex preserves the feasible family") {
  gdmtest::Rng rng(4712);
  auto z3 = GroupDescriptor::cyclic(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gdmtest::random_graph(rng, z3, 5, 5);
    // add an isolated vertex
    std::vector<VertexSpec> vs;
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back({g.vertex_id(v), g.label(v)});
    vs.push_back({"iso", gdmtest::random_element(rng, z3, 0.5)});
    std::vector<EdgeSpec> es;
    for (int e = 0; e < g.edge_count(); ++e)
      es.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)), g.vertex_id(g.edge_v(e))});
    LabelledGraph with_iso(z3, vs, es);
    auto before = enumerate_gamma_graphic(with_iso);
    auto after = enumerate_gamma_graphic(delete_isolated_vertex(with_iso, with_iso.vertex_index("iso")));
    CHECK(same_system(before, after));
  }
}

TEST_CASE("kappa monotone under deletion and contraction") {
  gdmtest::Rng rng(4713);
  auto z2 = GroupDescriptor::cyclic(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gdmtest::random_graph(rng, z2, 6, 7, 0.5);
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(kappa_after(g, {}, {e}) >= g.kappa());
      CHECK(kappa_after(g, {e}, {}) >= g.kappa());
      CHECK(delete_edge(g, e).kappa() == kappa_after(g, {}, {e}));
      CHECK(contract_edge(g, e).kappa() == kappa_after(g, {e}, {}));
    }
  }
}

TEST_CASE("bridge and tunnel match the enumerated family") {
  gdmtest::Rng rng(4714);
  std::vector<GroupDescriptorPtr> groups = {GroupDescriptor::cyclic(2),
                                            GroupDescriptor::cyclic(3),
                                            GroupDescriptor::integers()};
  int bridges = 0, tunnels = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto g = gdmtest::random_graph(rng, groups[trial % groups.size()], 6, 7, 0.45);
    auto family = gdmtest::ref_feasible_family(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      bool in_all = true, in_none = true;
      for (std::uint64_t f : family) {
        if (f >> e & 1)
          in_none = false;
        else
          in_all = false;
      }
      CHECK(is_gamma_bridge(g, e) == in_all);
      CHECK(is_gamma_tunnel(g, e) == (in_none && !g.is_loop(e)));
      bridges += in_all;
      tunnels += is_gamma_tunnel(g, e);
    }
  }
  // the generator must actually exercise both branches
  CHECK(bridges > 0);
  CHECK(tunnels > 0);
}
