#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lobekit/graph.hpp"
#include "lobekit/permutation.hpp"
#include "lobekit/schreier_sims.hpp"

namespace lobekit {

struct LobeDecomposition;

enum class GroupKind { full_automorphism, stabilizer, user_supplied };

std::string_view to_string(GroupKind kind);

/// Permutation generators of a group acting on 0..degree-1.
struct GeneratorSet {
  int degree = 0;
  std::vector<Permutation> generators;
  GroupKind kind = GroupKind::user_supplied;
};

enum class OrbitDomain { vertices, edges, arcs, lobes };

std::string_view to_string(OrbitDomain domain);

/// Orbits of a group on one of the induced domains. Edges are indexed as in
/// Graph::edges(); arcs (u, v) are ordered lexicographically; lobes use the
/// decomposition's lobe ids. Cells are sorted internally and listed by their
/// minimal element.
struct OrbitPartition {
  OrbitDomain domain = OrbitDomain::vertices;
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;

  int cell_count() const noexcept { return static_cast<int>(cells.size()); }
};

/// Canonical adjacency encoding: equal exactly for isomorphic (coloured) graphs.
struct Certificate {
  std::string bytes;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

/// Generators of Aut(g), or of the colour-preserving subgroup when `colors`
/// is non-empty (one colour per vertex).
GeneratorSet automorphism_generators(const Graph& g, std::span<const int> colors = {});

Certificate canonical_certificate(const Graph& g, std::span<const int> colors = {});

/// labeling[v] is v's position in the canonical form.
std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// A bijection m with {u,v} in a  <=>  {m[u],m[v]} in b (and equal colours,
/// when given), or nullopt when none exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
std::optional<std::vector<int>> find_isomorphism(const Graph& a, std::span<const int> colors_a,
                                                 const Graph& b, std::span<const int> colors_b);

/// Index of arc (u, v) in the lexicographic arc order of g, or -1.
int arc_index(const Graph& g, int u, int v);
int arc_count(const Graph& g);

/// Throws PreconditionError if a generator has the wrong degree or does not
/// map the domain to itself, or if lobes are requested without a decomposition.
OrbitPartition orbit_partition(const GeneratorSet& gens, OrbitDomain domain, const Graph& g,
                               const LobeDecomposition* lobes = nullptr);

/// Image of lobe `lobe_id` under p.
int lobe_image(const Graph& g, const LobeDecomposition& d, const Permutation& p, int lobe_id);

/// Schreier generators of the setwise stabilizer of a lobe, given generators
/// of the full group. Identity and duplicate generators are dropped.
GeneratorSet lobe_stabilizer(const Graph& g, const GeneratorSet& gens, const LobeDecomposition& d,
                             int lobe_id);

/// Action of (stabilizer) generators on the lobe's own vertices, relabelled
/// to 0..|lobe|-1 in the lobe's sorted vertex order.
GeneratorSet restrict_to_lobe(const GeneratorSet& gens, const LobeDecomposition& d, int lobe_id);

inline constexpr int kDefaultMaxGroupDegree = 4096;

/// Order of the generated group; throws ResourceError if the degree exceeds
/// `max_degree`.
BigInt group_order(const GeneratorSet& gens, int max_degree = kDefaultMaxGroupDegree);

}  // namespace lobekit
