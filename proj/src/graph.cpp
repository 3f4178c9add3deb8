#include "lobekit/graph.hpp"

#include <algorithm>
#include <string>

#include "lobekit/error.hpp"

namespace lobekit {

bool Graph::has_edge(int u, int v) const noexcept {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const noexcept {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph make_graph(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") with " + std::to_string(vertex_count) +
                       " vertices");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(static_cast<size_t>(vertex_count) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(g.edges_.size() * 2);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return make_graph(vertex_count, es);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.vertex_count()) {
      throw PreconditionError("induced_subgraph: vertex out of range");
    }
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      int j = local[w];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<int>(i), j});
    }
  }
  return make_graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const int> images) {
  if (static_cast<int>(images.size()) != g.vertex_count()) {
    throw PreconditionError("relabel: image count does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({images[e.u], images[e.v]});
  return make_graph(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return make_graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace lobekit
