#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lobekit/decomposition.hpp"
#include "lobekit/graph.hpp"
#include "lobekit/schreier_sims.hpp"

namespace lobekit {

/// values[k][j][v] = number of lobes of class k in which v carries orbit
/// label j. constant[k][j] tells whether that function is constant on all
/// vertices.
struct TauTable {
  std::vector<std::vector<std::vector<int>>> values;
  std::vector<std::vector<bool>> constant;

  int class_count() const noexcept { return static_cast<int>(values.size()); }
  int orbit_count(int k) const { return static_cast<int>(values[k].size()); }
};

/// Throws PreconditionError when the graph has fewer than two lobes.
TauTable tau_table(const Graph& g, const LobeDecomposition& d);

/// Orbit counts of Aut(g), the ground truth every theorem check is compared
/// against. lobe_orbits is set only for connectivity-1 graphs.
struct DirectCounts {
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int arc_orbits = 0;
  std::optional<int> lobe_orbits;
  BigInt group_order = 1;
};

DirectCounts classify_direct(const Graph& g);

struct VertexVerdict {
  bool holds = false;
  // First non-constant tau function and two vertices where it differs.
  int k = -1;
  int j = -1;
  int u = -1;
  int v = -1;
};

VertexVerdict is_vertex_transitive_thm(const Graph& g, const LobeDecomposition& d, const TauTable& tau);

enum class LobeFailure { none, lobes_not_isomorphic, orbit_images, tau_not_constant };

std::string_view to_string(LobeFailure f);

struct LobeVerdict {
  bool holds = false;
  LobeFailure failure = LobeFailure::none;
  std::pair<int, int> lobe_pair{-1, -1};  // for lobes_not_isomorphic
  int i = -1;                             // orbit P_i, orbit label Q_j, vertex v
  int j = -1;
  int v = -1;
  std::vector<std::vector<int>> p_orbits;  // Aut(g) vertex orbits
  std::vector<std::vector<int>> q_orbits;  // stabilizer orbits inside the base lobe
  std::vector<std::vector<int>> tau;       // tau[j][v]
};

/// Lobe-transitivity via the orbit/tau conditions, with `base_lobe` playing
/// the fixed lobe. Each lobe's reference isomorphism is chosen to respect
/// the Aut(g) vertex orbits when such an isomorphism exists.
LobeVerdict is_lobe_transitive_thm(const Graph& g, const LobeDecomposition& d, int base_lobe = 0);

enum class EdgeCase { none, a, b, c };

std::string_view to_string(EdgeCase c);

struct EdgeVerdict {
  bool holds = false;
  EdgeCase edge_case = EdgeCase::none;
  std::optional<std::pair<long long, long long>> m;
  std::string reason;  // first failing condition when holds is false
};

EdgeVerdict is_edge_transitive_thm(const Graph& g, const LobeDecomposition& d, int base_lobe = 0);

struct ArcVerdict {
  bool holds = false;
  std::string reason;
};

ArcVerdict is_arc_transitive_thm(const Graph& g, const LobeDecomposition& d);

/// For a tree: (n1, n2) with n1 <= n2 when every edge joins a vertex of
/// valence n1 to one of valence n2. Throws PreconditionError for non-trees.
std::optional<std::pair<int, int>> tree_edge_transitivity(const Graph& g);

/// Aut(g)-orbits on walks of k+1 vertices without immediate reversal.
/// Throws PreconditionError when there are no such walks and
/// ResourceError when there are more than `max_arcs`.
long long k_arc_orbit_count(const Graph& g, int k, long long max_arcs = 20'000'000);

struct ShellFailure {
  int shell = -1;
  int vertex = -1;
  std::string reason;
};

struct Extension {
  std::vector<int> map;  // host vertex -> image, -1 outside the extended ball
  int radius = 0;        // radius actually reached
  std::optional<ShellFailure> failure;
};

/// Grows an isomorphism between the radius-r lobe balls around `source` and
/// `target` shell by shell up to `target_radius`. New lobes at each
/// boundary vertex are matched by lobe class and orbit label (the tau
/// counts), then by the shape of what hangs below them; the first shell
/// where no matching exists is reported. `ball_map` has one entry per host
/// vertex, -1 outside the source ball.
Extension extend_lobe_isomorphism(const Graph& g, const LobeDecomposition& d, int source, int target,
                                  std::span<const int> ball_map, int radius, int target_radius);

struct ClassificationReport {
  ConnectivityClass connectivity = ConnectivityClass::disconnected;
  int lobe_count = 0;
  DirectCounts direct;
  std::optional<VertexVerdict> vertex;
  std::optional<LobeVerdict> lobe;
  std::optional<EdgeVerdict> edge;
  std::optional<ArcVerdict> arc;
  std::optional<std::pair<int, int>> tree;
  bool is_tree = false;
  bool consistent = true;  // theorem verdicts agree with the orbit counts
};

/// Runs the oracle on any connected graph and, for connectivity-1 input,
/// every theorem check. Throws PreconditionError for disconnected input.
ClassificationReport classify(const Graph& g);

}  // namespace lobekit
