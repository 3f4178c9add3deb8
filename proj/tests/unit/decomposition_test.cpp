#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "lobekit/builder.hpp"
#include "lobekit/catalog.hpp"
#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"
#include "lobekit/json_io.hpp"
#include "lobekit/lobe_tree.hpp"
#include "lobekit/symmetry.hpp"
#include "support/oracles.hpp"

using namespace lobekit;
namespace lt = lobekit::testing;

namespace {

// Vertices reachable from `start` without passing through `removed`.
std::vector<bool> reach(const Graph& g, int start, int removed) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (w != removed && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Two edges share a lobe iff no single vertex separates them.
bool same_lobe(const Graph& g, const Edge& e, const Edge& f) {
  if (e == f) return true;
  for (int x = 0; x < g.vertex_count(); ++x) {
    const int a = e.u == x ? e.v : e.u;
    const int b = f.u == x ? f.v : f.u;
    if (!reach(g, a, x)[b]) return false;
  }
  return true;
}

bool is_cut_vertex(const Graph& g, int v) {
  if (g.vertex_count() <= 2) return false;
  const int start = v == 0 ? 1 : 0;
  const auto seen = reach(g, start, v);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w != v && !seen[w]) return true;
  }
  return false;
}

void check_against_oracle(const Graph& g) {
  const LobeDecomposition d = decompose(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int j = i + 1; j < g.edge_count(); ++j) {
      CHECK((d.edge_lobe[i] == d.edge_lobe[j]) == same_lobe(g, g.edges()[i], g.edges()[j]));
    }
  }
  std::vector<int> cuts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_cut_vertex(g, v)) cuts.push_back(v);
  }
  CHECK(d.cut_vertices == cuts);

  // The block-cut tree is a tree.
  const int nodes = d.lobe_count() + static_cast<int>(d.cut_vertices.size());
  CHECK(static_cast<int>(d.tree_edges.size()) == nodes - 1);
  std::vector<std::pair<int, int>> tree;
  for (auto [lobe, v] : d.tree_edges) {
    const int c = static_cast<int>(std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), v) -
                                   d.cut_vertices.begin());
    tree.emplace_back(lobe, d.lobe_count() + c);
  }
  CHECK(is_connected(make_graph(nodes, tree)));

  // Every sigma is an isomorphism from the class representative.
  for (int l = 0; l < d.lobe_count(); ++l) {
    const int k = d.classes.class_of[l];
    const Lobe& rep = d.lobes[d.classes.representatives[k]];
    const auto& sigma = d.classes.sigma[l];
    REQUIRE(sigma.size() == rep.vertices.size());
    std::vector<int> image(sigma.begin(), sigma.end());
    std::sort(image.begin(), image.end());
    CHECK(image == d.lobes[l].vertices);
    for (const Edge& e : rep.edges) CHECK(g.has_edge(sigma[rep.local_index(e.u)], sigma[rep.local_index(e.v)]));
    CHECK(rep.edges.size() == d.lobes[l].edges.size());
    for (size_t i = 0; i < sigma.size(); ++i) {
      CHECK(d.classes.label[l][d.lobes[l].local_index(sigma[i])] == d.classes.orbit_of[k][i]);
    }
  }
  // Classes are isomorphism classes.
  for (int a = 0; a < d.lobe_count(); ++a) {
    for (int b = a + 1; b < d.lobe_count(); ++b) {
      const bool iso = find_isomorphism(lobe_subgraph(g, d.lobes[a]), lobe_subgraph(g, d.lobes[b])).has_value();
      CHECK(iso == (d.classes.class_of[a] == d.classes.class_of[b]));
    }
  }
}

}  // namespace

TEST_CASE("decomposition matches the separation oracle on all connected graphs up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : lt::connected_graphs(n)) check_against_oracle(g);
  }
}

TEST_CASE("decomposition matches the separation oracle on random connectivity-1 graphs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) check_against_oracle(lt::random_connectivity_one(rng, 18));
}

TEST_CASE("connectivity classes") {
  CHECK(connectivity_class(make_graph(1, std::vector<std::pair<int, int>>{})) == ConnectivityClass::disconnected);
  CHECK(connectivity_class(named_graph("path", {2})) == ConnectivityClass::single_k2);
  CHECK(connectivity_class(named_graph("petersen")) == ConnectivityClass::biconnected);
  CHECK(connectivity_class(named_graph("star", {3})) == ConnectivityClass::connectivity_one);
  CHECK(connectivity_class(disjoint_union(named_graph("k4"), named_graph("k4"))) == ConnectivityClass::disconnected);
  CHECK(to_string(ConnectivityClass::connectivity_one) == "connectivity_one");
}

TEST_CASE("decompose rejects disconnected and edgeless input") {
  CHECK_THROWS_AS(decompose(make_graph(1, std::vector<std::pair<int, int>>{})), PreconditionError);
  CHECK_THROWS_AS(decompose(disjoint_union(named_graph("k4"), named_graph("k4"))), PreconditionError);
}

TEST_CASE("cut edges are lobes") {
  const Graph g = named_graph("path", {4});
  const LobeDecomposition d = decompose(g);
  CHECK(d.lobe_count() == 3);
  CHECK(d.cut_vertices == std::vector<int>{1, 2});
  CHECK(d.classes.class_count() == 1);
  CHECK(d.lobes_of_vertex[1] == std::vector<int>{0, 1});
  CHECK(d.is_cut_vertex(2));
  CHECK_FALSE(d.is_cut_vertex(0));
}

TEST_CASE("lobe distances and balls on a chain of triangles") {
  // Triangles t0..t3 chained through vertices 2, 4, 6.
  const Graph g = make_graph(9, std::vector<std::pair<int, int>>{
                                    {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                                    {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}});
  const LobeDecomposition d = decompose(g);
  REQUIRE(d.lobe_count() == 4);
  CHECK(lobe_distances(d, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(lobe_ball_lobes(d, 1, 1) == std::vector<int>{0, 1, 2});
  const LobeBall ball = lobe_ball(g, d, 0, 2);
  CHECK(ball.lobes == std::vector<int>{0, 1, 2});
  CHECK(ball.to_global == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(ball.graph.edge_count() == 9);
  CHECK(lobe_ball(g, d, 3, 0).graph.vertex_count() == 3);
}

TEST_CASE("the radius-1 ball of the chorded 5-cycle build is its depth-1 truncation") {
  // Reference numbers: one central lobe, 13 glued copies of a 5-vertex,
  // 6-edge lobe.
  const BuildSpec spec = load_build_spec(lt::fixture_path("chorded_5_cycle.json"));
  const BuildResult t = build_truncation(with_depth(spec, 3));
  const LobeDecomposition d = decompose(t.graph);
  int central = -1;
  for (int l = 0; l < d.lobe_count(); ++l) {
    if (d.lobes[l].vertices == std::vector<int>{0, 1, 2, 3, 4}) central = l;
  }
  REQUIRE(central >= 0);
  const LobeBall ball = lobe_ball(t.graph, d, central, 1);
  CHECK(ball.lobes.size() == 14);
  CHECK(ball.graph.vertex_count() == 57);
  CHECK(ball.graph.edge_count() == 84);
  CHECK(find_isomorphism(ball.graph, lt::chorded_5_cycle_by_hand()).has_value());
}

TEST_CASE("orbit labels are shared across a lobe class") {
  // Two chorded 5-cycles glued at different positions: one class, and the
  // labels of the shared vertex differ between the two lobes.
  const Graph c = named_graph("chorded_5_cycle");
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : c.edges()) edges.emplace_back(e.u, e.v);
  // Second copy: its vertex 1 (the degree-2 apex between chord ends) is host vertex 3.
  const std::vector<int> id = {5, 3, 6, 7, 8};
  for (const Edge& e : c.edges()) edges.emplace_back(id[e.u], id[e.v]);
  const Graph g = make_graph(9, edges);
  const LobeDecomposition d = decompose(g);
  REQUIRE(d.lobe_count() == 2);
  CHECK(d.classes.class_count() == 1);
  CHECK(d.classes.orbit_count[0] == 3);
  const int in_first = d.classes.label[0][d.lobes[0].local_index(3)];
  const int in_second = d.classes.label[1][d.lobes[1].local_index(3)];
  CHECK(in_first != in_second);
}

TEST_CASE("block tree isomorphism agrees with canonical certificates") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs;
  for (int i = 0; i < 60; ++i) graphs.push_back(lt::random_connectivity_one(rng, 16));
  for (const Graph& g : lt::connected_graphs(5)) graphs.push_back(g);
  for (size_t i = 0; i < graphs.size(); ++i) {
    std::vector<int> p(graphs[i].vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(block_tree_isomorphic(graphs[i], relabel(graphs[i], p)));
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      const bool same = canonical_certificate(graphs[i]) == canonical_certificate(graphs[j]);
      CHECK(block_tree_isomorphic(graphs[i], graphs[j]) == same);
    }
  }
  CHECK_THROWS_AS(block_tree_isomorphic(disjoint_union(named_graph("k4"), named_graph("k4")),
                                        disjoint_union(named_graph("k4"), named_graph("k4"))),
                  PreconditionError);
}
