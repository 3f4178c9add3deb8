#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace lobekit {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple graph on vertices 0..vertex_count-1.
///
/// Edges are kept sorted lexicographically and adjacency lists are sorted,
/// so two graphs built from the same edge set compare equal regardless of
/// input order.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  int degree(int v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(int u, int v) const noexcept;

  /// Position of {u, v} in edges(), or -1.
  int edge_index(int u, int v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph make_graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
};

/// Builds a graph, normalizing (u, v) to u < v and dropping duplicates.
/// Throws InputError on out-of-range endpoints or self-loops.
Graph make_graph(int vertex_count, std::span<const Edge> edges);
Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);

/// Subgraph induced on `vertices`; local vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Graph with every edge {u, v} replaced by {images[u], images[v]}.
Graph relabel(const Graph& g, std::span<const int> images);

/// Disjoint union; the second graph's vertices are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace lobekit
