#include "lobekit/decomposition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lobekit/error.hpp"
#include "lobekit/symmetry.hpp"
#include "search.hpp"

namespace lobekit {

std::string_view to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::disconnected:
      return "disconnected";
    case ConnectivityClass::single_k2:
      return "single_K2";
    case ConnectivityClass::biconnected:
      return "biconnected";
    case ConnectivityClass::connectivity_one:
      return "connectivity_one";
  }
  return "unknown";
}

int Lobe::local_index(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

namespace {

// Edge-stack biconnected components (Hopcroft-Tarjan), iterative. Returns
// one list of edge indices per component.
std::vector<std::vector<int>> biconnected_edge_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> parent(n, -1);
  std::vector<int> next_neighbor(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> components;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int v = stack.back();
      auto nb = g.neighbors(v);
      if (next_neighbor[v] < static_cast<int>(nb.size())) {
        const int w = nb[next_neighbor[v]++];
        if (disc[w] < 0) {
          edge_stack.push_back(g.edge_index(v, w));
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.push_back(g.edge_index(v, w));
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const int p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        const int tree_edge = g.edge_index(p, v);
        std::vector<int> component;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          component.push_back(e);
          if (e == tree_edge) break;
        }
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

}  // namespace

ConnectivityClass connectivity_class(const Graph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return ConnectivityClass::disconnected;
  if (g.vertex_count() == 2) return ConnectivityClass::single_k2;
  const auto components = biconnected_edge_sets(g);
  return components.size() == 1 ? ConnectivityClass::biconnected : ConnectivityClass::connectivity_one;
}

LobeDecomposition decompose(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("decompose: graph has no edges");
  if (!is_connected(g)) throw PreconditionError("decompose: graph is disconnected");

  auto components = biconnected_edge_sets(g);
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });

  LobeDecomposition d;
  d.vertex_count = g.vertex_count();
  d.edge_lobe.assign(g.edge_count(), -1);
  d.lobes_of_vertex.assign(g.vertex_count(), {});
  for (size_t id = 0; id < components.size(); ++id) {
    Lobe lobe;
    for (int e : components[id]) {
      const Edge edge = g.edges()[e];
      lobe.edges.push_back(edge);
      lobe.vertices.push_back(edge.u);
      lobe.vertices.push_back(edge.v);
      d.edge_lobe[e] = static_cast<int>(id);
    }
    std::sort(lobe.vertices.begin(), lobe.vertices.end());
    lobe.vertices.erase(std::unique(lobe.vertices.begin(), lobe.vertices.end()), lobe.vertices.end());
    for (int v : lobe.vertices) d.lobes_of_vertex[v].push_back(static_cast<int>(id));
    d.lobes.push_back(std::move(lobe));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d.lobes_of_vertex[v].size() >= 2) d.cut_vertices.push_back(v);
  }
  for (int c : d.cut_vertices) {
    for (int l : d.lobes_of_vertex[c]) d.tree_edges.emplace_back(l, c);
  }
  std::sort(d.tree_edges.begin(), d.tree_edges.end());
  d.classes = lobe_classes(g, d);
  return d;
}

Graph lobe_subgraph(const Graph& g, const Lobe& lobe) { return induced_subgraph(g, lobe.vertices); }

LobeClasses lobe_classes(const Graph& g, const LobeDecomposition& d) {
  LobeClasses out;
  const int lobe_total = d.lobe_count();
  out.class_of.assign(lobe_total, -1);
  out.sigma.assign(lobe_total, {});
  out.label.assign(lobe_total, {});

  // Lobes repeat heavily in symmetric graphs; search each distinct local
  // graph once.
  std::map<std::vector<Edge>, detail::SearchOutput> searched;
  std::map<std::string, int> class_by_certificate;
  std::vector<const detail::SearchOutput*> search_of(lobe_total, nullptr);

  for (int l = 0; l < lobe_total; ++l) {
    Graph local = lobe_subgraph(g, d.lobes[l]);
    std::vector<Edge> key(local.edges().begin(), local.edges().end());
    key.push_back({local.vertex_count(), -1});
    auto it = searched.find(key);
    if (it == searched.end()) it = searched.emplace(key, detail::canonical_search(local, {})).first;
    search_of[l] = &it->second;

    auto [cit, inserted] = class_by_certificate.emplace(it->second.certificate, out.class_count());
    if (inserted) {
      out.representatives.push_back(l);
      const auto gens = it->second.generators;
      GeneratorSet set{local.vertex_count(), gens, GroupKind::full_automorphism};
      OrbitPartition orbits = orbit_partition(set, OrbitDomain::vertices, local);
      out.orbit_of.push_back(orbits.cell_of);
      out.orbit_count.push_back(orbits.cell_count());
    }
    out.class_of[l] = cit->second;
  }

  for (int l = 0; l < lobe_total; ++l) {
    const int k = out.class_of[l];
    const int rep = out.representatives[k];
    const auto& rep_labeling = search_of[rep]->labeling;
    const auto& labeling = search_of[l]->labeling;
    const auto& vertices = d.lobes[l].vertices;
    const int size = static_cast<int>(vertices.size());
    std::vector<int> at_position(size);
    for (int i = 0; i < size; ++i) at_position[labeling[i]] = i;
    out.sigma[l].resize(size);
    out.label[l].resize(size);
    for (int i = 0; i < size; ++i) {
      const int local_image = at_position[rep_labeling[i]];
      out.sigma[l][i] = vertices[local_image];
      out.label[l][local_image] = out.orbit_of[k][i];
    }
  }
  return out;
}

std::vector<int> lobe_distances(const LobeDecomposition& d, int lobe_id) {
  if (lobe_id < 0 || lobe_id >= d.lobe_count()) {
    throw PreconditionError("invalid lobe id " + std::to_string(lobe_id));
  }
  std::vector<int> dist(d.lobe_count(), -1);
  std::vector<char> vertex_done(d.vertex_count, 0);
  std::vector<int> frontier{lobe_id};
  dist[lobe_id] = 0;
  for (int step = 1; !frontier.empty(); ++step) {
    std::vector<int> next;
    for (int l : frontier) {
      for (int v : d.lobes[l].vertices) {
        if (vertex_done[v]) continue;
        vertex_done[v] = 1;
        for (int m : d.lobes_of_vertex[v]) {
          if (dist[m] < 0) {
            dist[m] = step;
            next.push_back(m);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<int> lobe_ball_lobes(const LobeDecomposition& d, int lobe_id, int radius) {
  if (radius < 0) throw PreconditionError("lobe ball radius must be non-negative");
  const auto dist = lobe_distances(d, lobe_id);
  std::vector<int> out;
  for (int l = 0; l < d.lobe_count(); ++l) {
    if (dist[l] >= 0 && dist[l] <= radius) out.push_back(l);
  }
  return out;
}

LobeBall lobe_ball(const Graph& g, const LobeDecomposition& d, int lobe_id, int radius) {
  LobeBall ball;
  ball.lobes = lobe_ball_lobes(d, lobe_id, radius);
  for (int l : ball.lobes) {
    ball.to_global.insert(ball.to_global.end(), d.lobes[l].vertices.begin(), d.lobes[l].vertices.end());
  }
  std::sort(ball.to_global.begin(), ball.to_global.end());
  ball.to_global.erase(std::unique(ball.to_global.begin(), ball.to_global.end()), ball.to_global.end());
  ball.graph = induced_subgraph(g, ball.to_global);
  return ball;
}

}  // namespace lobekit
