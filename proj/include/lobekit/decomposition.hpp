#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lobekit/graph.hpp"

namespace lobekit {

enum class ConnectivityClass { disconnected, single_k2, biconnected, connectivity_one };

std::string_view to_string(ConnectivityClass c);

/// Total classification. Graphs with fewer than two vertices are reported
/// as disconnected (they have no lobes).
ConnectivityClass connectivity_class(const Graph& g);

/// A maximal biconnected subgraph or a cut edge with its endpoints.
struct Lobe {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted

  /// Position of v in `vertices`, or -1.
  int local_index(int v) const;
};

/// Isomorphism classes of lobes with consistent orbit labels.
///
/// Class k has representative lobe representatives[k] (the minimal lobe id
/// in the class). sigma[l][i] is the image of the representative's i-th
/// vertex under a fixed isomorphism onto lobe l. orbit_of[k][i] is the index
/// of the Aut(representative) orbit containing its i-th vertex (orbits
/// numbered by minimal local vertex). label[l][i] is the orbit index of
/// lobe l's i-th vertex, transported through sigma.
struct LobeClasses {
  std::vector<int> class_of;
  std::vector<int> representatives;
  std::vector<std::vector<int>> sigma;
  std::vector<std::vector<int>> orbit_of;
  std::vector<int> orbit_count;
  std::vector<std::vector<int>> label;

  int class_count() const noexcept { return static_cast<int>(representatives.size()); }
};

struct LobeDecomposition {
  int vertex_count = 0;
  std::vector<Lobe> lobes;                       // ordered by minimal edge
  std::vector<int> edge_lobe;                    // edge index in g.edges() -> lobe id
  std::vector<int> cut_vertices;                 // sorted
  std::vector<std::vector<int>> lobes_of_vertex; // sorted lobe ids per vertex
  std::vector<std::pair<int, int>> tree_edges;   // block-cut tree: (lobe id, cut vertex), sorted
  LobeClasses classes;

  int lobe_count() const noexcept { return static_cast<int>(lobes.size()); }
  bool is_cut_vertex(int v) const { return lobes_of_vertex[v].size() >= 2; }
};

/// Throws PreconditionError for disconnected or edgeless input.
LobeDecomposition decompose(const Graph& g);

/// The lobe as a graph on local ids (local i = lobe.vertices[i]).
Graph lobe_subgraph(const Graph& g, const Lobe& lobe);

LobeClasses lobe_classes(const Graph& g, const LobeDecomposition& d);

struct LobeBall {
  Graph graph;                // local ids
  std::vector<int> to_global; // local -> vertex of the host graph (sorted)
  std::vector<int> lobes;     // lobe ids in the ball (sorted)
};

/// Union of lobes within lobe-distance `radius` of a lobe: radius 0 is the
/// lobe itself, radius n+1 adds every lobe meeting the radius-n ball.
LobeBall lobe_ball(const Graph& g, const LobeDecomposition& d, int lobe_id, int radius);

/// Lobe ids of the radius-n ball without building the subgraph.
std::vector<int> lobe_ball_lobes(const LobeDecomposition& d, int lobe_id, int radius);

/// Shortest lobe-to-lobe step count in the block-cut tree (0 for the same
/// lobe, 1 for lobes sharing a cut vertex).
std::vector<int> lobe_distances(const LobeDecomposition& d, int lobe_id);

}  // namespace lobekit
