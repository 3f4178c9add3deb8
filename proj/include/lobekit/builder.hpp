#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lobekit/graph.hpp"
#include "lobekit/lobe_tree.hpp"
#include "lobekit/symmetry.hpp"
#include "lobekit/transitivity.hpp"

namespace lobekit {

/// Build data as read from a document, before validation. Orbit and cell
/// indices in `mu` are 1-based, as in the external format.
struct RawBuildSpec {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<std::vector<int>>> h;  // nullopt = all of Aut(lambda0)
  std::vector<std::vector<int>> r_partition;
  struct MuEntry {
    long long k = 0;
    std::vector<std::pair<long long, long long>> values;  // (j, count)
  };
  std::vector<MuEntry> mu;
  long long depth = 0;
};

/// Validated build data. Orbits of <H> are indexed 0.. by minimal element;
/// cells of R keep their input order. mu[k][j] is the number of lobes in
/// which a vertex of cell k sits in an image of orbit j.
struct BuildSpec {
  Graph lambda0;
  GeneratorSet h;
  bool h_is_full = false;
  std::vector<std::vector<int>> q;
  std::vector<int> q_of;
  std::vector<std::vector<int>> r;
  std::vector<int> r_of;
  std::vector<std::vector<long long>> mu;
  int depth = 0;

  int orbit_count() const noexcept { return static_cast<int>(q.size()); }
  int cell_count() const noexcept { return static_cast<int>(r.size()); }
  /// Lobes containing a vertex of cell k.
  long long lobe_count(int k) const;
};

/// Throws InputError describing the first violated condition.
BuildSpec validate_spec(const RawBuildSpec& raw);

/// The same spec grown to a different depth.
BuildSpec with_depth(BuildSpec spec, int depth);

struct BuildOptions {
  long long max_vertices = 50'000'000;
  /// When set, each new copy is attached at a pseudo-randomly chosen member
  /// of the orbit instead of its minimal vertex.
  std::optional<std::uint64_t> attach_seed;
};

struct BuildResult {
  Graph graph;
  std::vector<std::vector<int>> lobe_sigma;  // lobe -> lambda0 vertex -> host vertex
  std::vector<int> lobe_depth;               // stage at which each lobe was created
  std::vector<int> vertex_depth;             // stage at which each vertex appeared
  int depth = 0;

  int lobe_count() const noexcept { return static_cast<int>(lobe_sigma.size()); }
};

/// Throws ResourceError when the truncation would exceed max_vertices.
BuildResult build_truncation(const BuildSpec& spec, const BuildOptions& options = {});

/// The registry as a lobe system over the truncation, shape 0 = lambda0.
LobeSystem lobe_system(const BuildResult& result, const BuildSpec& spec);

struct InteriorReport {
  bool ok = true;
  long long interior_vertices = 0;
  long long frontier_vertices = 0;
  std::vector<std::string> violations;  // first few only
};

InteriorReport verify_interior(const BuildResult& result, const BuildSpec& spec);

/// Checks that the registered maps are isomorphisms onto induced subgraphs
/// of the truncation and that each lobe's certificate equals lambda0's.
bool lobes_match_lambda0(const BuildResult& result, const BuildSpec& spec);

struct LimitReport {
  bool lobe_transitive = true;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  EdgeCase edge_case = EdgeCase::none;
  std::optional<std::pair<long long, long long>> m;
  std::string edge_reason;
  bool lambda0_vertex_transitive = false;
  bool lambda0_edge_transitive = false;
  bool lambda0_arc_transitive = false;
  std::vector<std::vector<int>> lambda0_orbits;  // Aut(lambda0) vertex orbits
  std::vector<std::vector<long long>> tau;       // tau[k][a]: lobes through a cell-k vertex in images of orbit a
  std::vector<long long> lobe_counts;            // per cell of R
};

/// Symbolic classification of the infinite graph the spec describes.
LimitReport classify_limit(const BuildSpec& spec);

/// Isomorphism of the two truncations at `compare_depth`. Equal limits
/// imply a true answer; a true answer is evidence, not proof, of equal
/// limits.
bool spec_equivalent(const BuildSpec& a, const BuildSpec& b, int compare_depth, const BuildOptions& options = {});

struct LocalTransitivity {
  bool holds = true;
  int checked_lobes = 0;
  std::optional<std::pair<int, int>> witness;  // first lobe pair with different balls
};

/// Compares the rooted radius-r lobe balls of every lobe created at stage
/// <= depth - radius. Throws PreconditionError unless radius <= depth - 1.
LocalTransitivity verify_local_transitivity(const BuildResult& result, const BuildSpec& spec, int radius);

}  // namespace lobekit
