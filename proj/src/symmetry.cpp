#include "lobekit/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"
#include "search.hpp"

namespace lobekit {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::full_automorphism:
      return "full_automorphism";
    case GroupKind::stabilizer:
      return "stabilizer";
    case GroupKind::user_supplied:
      return "user_supplied";
  }
  return "unknown";
}

std::string_view to_string(OrbitDomain domain) {
  switch (domain) {
    case OrbitDomain::vertices:
      return "vertices";
    case OrbitDomain::edges:
      return "edges";
    case OrbitDomain::arcs:
      return "arcs";
    case OrbitDomain::lobes:
      return "lobes";
  }
  return "unknown";
}

GeneratorSet automorphism_generators(const Graph& g, std::span<const int> colors) {
  auto out = detail::canonical_search(g, colors);
  return {g.vertex_count(), std::move(out.generators), GroupKind::full_automorphism};
}

Certificate canonical_certificate(const Graph& g, std::span<const int> colors) {
  return {detail::canonical_search(g, colors).certificate};
}

std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors) {
  return detail::canonical_search(g, colors).labeling;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  return find_isomorphism(a, {}, b, {});
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, std::span<const int> colors_a,
                                                 const Graph& b, std::span<const int> colors_b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (colors_a.empty() != colors_b.empty()) {
    throw PreconditionError("find_isomorphism: colour both graphs or neither");
  }
  auto sa = detail::canonical_search(a, colors_a);
  auto sb = detail::canonical_search(b, colors_b);
  if (sa.certificate != sb.certificate) return std::nullopt;
  const int n = a.vertex_count();
  std::vector<int> at_position(n);
  for (int v = 0; v < n; ++v) at_position[sb.labeling[v]] = v;
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = at_position[sa.labeling[v]];
  return map;
}

int arc_count(const Graph& g) { return 2 * g.edge_count(); }

int arc_index(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count()) return -1;
  // Arcs are ordered by tail, then head; the block for tail u starts after
  // all arcs with smaller tails.
  int offset = 0;
  for (int w = 0; w < u; ++w) offset += g.degree(w);
  auto nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return offset + static_cast<int>(it - nb.begin());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

OrbitPartition cells_from(DisjointSets& sets, int size, OrbitDomain domain) {
  OrbitPartition out;
  out.domain = domain;
  out.cell_of.assign(size, -1);
  std::vector<int> cell_of_root(size, -1);
  for (int x = 0; x < size; ++x) {
    const int root = sets.find(x);
    if (cell_of_root[root] < 0) {
      cell_of_root[root] = static_cast<int>(out.cells.size());
      out.cells.emplace_back();
    }
    out.cell_of[x] = cell_of_root[root];
    out.cells[cell_of_root[root]].push_back(x);
  }
  return out;
}

void check_degree(const GeneratorSet& gens, const Graph& g) {
  for (const Permutation& p : gens.generators) {
    if (p.degree() != g.vertex_count()) {
      throw PreconditionError("generator of degree " + std::to_string(p.degree()) +
                              " does not act on a graph with " + std::to_string(g.vertex_count()) +
                              " vertices");
    }
  }
}

std::vector<int> arc_offsets(const Graph& g) {
  std::vector<int> offsets(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) offsets[v + 1] = offsets[v] + g.degree(v);
  return offsets;
}

}  // namespace

int lobe_image(const Graph& g, const LobeDecomposition& d, const Permutation& p, int lobe_id) {
  const Edge e = d.lobes.at(lobe_id).edges.front();
  const int image = g.edge_index(p(e.u), p(e.v));
  if (image < 0) throw PreconditionError("permutation is not an automorphism: edge image missing");
  return d.edge_lobe[image];
}

OrbitPartition orbit_partition(const GeneratorSet& gens, OrbitDomain domain, const Graph& g,
                               const LobeDecomposition* lobes) {
  check_degree(gens, g);
  switch (domain) {
    case OrbitDomain::vertices: {
      DisjointSets sets(g.vertex_count());
      for (const Permutation& p : gens.generators) {
        for (int v = 0; v < g.vertex_count(); ++v) sets.unite(v, p(v));
      }
      return cells_from(sets, g.vertex_count(), domain);
    }
    case OrbitDomain::edges: {
      DisjointSets sets(g.edge_count());
      for (const Permutation& p : gens.generators) {
        for (int i = 0; i < g.edge_count(); ++i) {
          const Edge e = g.edges()[i];
          const int j = g.edge_index(p(e.u), p(e.v));
          if (j < 0) throw PreconditionError("generator does not map edges to edges");
          sets.unite(i, j);
        }
      }
      return cells_from(sets, g.edge_count(), domain);
    }
    case OrbitDomain::arcs: {
      const auto offsets = arc_offsets(g);
      DisjointSets sets(arc_count(g));
      for (const Permutation& p : gens.generators) {
        for (int u = 0; u < g.vertex_count(); ++u) {
          auto nb = g.neighbors(u);
          for (size_t k = 0; k < nb.size(); ++k) {
            const int pu = p(u);
            auto pnb = g.neighbors(pu);
            auto it = std::lower_bound(pnb.begin(), pnb.end(), p(nb[k]));
            if (it == pnb.end() || *it != p(nb[k])) {
              throw PreconditionError("generator does not map arcs to arcs");
            }
            sets.unite(offsets[u] + static_cast<int>(k), offsets[pu] + static_cast<int>(it - pnb.begin()));
          }
        }
      }
      return cells_from(sets, arc_count(g), domain);
    }
    case OrbitDomain::lobes: {
      if (lobes == nullptr) throw PreconditionError("lobe orbits need a lobe decomposition");
      DisjointSets sets(lobes->lobe_count());
      for (const Permutation& p : gens.generators) {
        for (int l = 0; l < lobes->lobe_count(); ++l) sets.unite(l, lobe_image(g, *lobes, p, l));
      }
      return cells_from(sets, lobes->lobe_count(), domain);
    }
  }
  throw PreconditionError("unknown orbit domain");
}

GeneratorSet lobe_stabilizer(const Graph& g, const GeneratorSet& gens, const LobeDecomposition& d,
                             int lobe_id) {
  if (lobe_id < 0 || lobe_id >= d.lobe_count()) {
    throw PreconditionError("invalid lobe id " + std::to_string(lobe_id));
  }
  check_degree(gens, g);
  const int n = g.vertex_count();
  const int lobe_total = d.lobe_count();

  std::vector<std::vector<int>> lobe_action;
  for (const Permutation& p : gens.generators) {
    std::vector<int> images(lobe_total);
    for (int l = 0; l < lobe_total; ++l) images[l] = lobe_image(g, d, p, l);
    lobe_action.push_back(std::move(images));
  }

  // Orbit of the lobe with a transversal of vertex permutations.
  std::vector<int> slot(lobe_total, -1);
  std::vector<int> orbit{lobe_id};
  std::vector<Permutation> transversal{Permutation::identity(n)};
  slot[lobe_id] = 0;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (size_t s = 0; s < gens.generators.size(); ++s) {
      const int image = lobe_action[s][orbit[i]];
      if (slot[image] >= 0) continue;
      slot[image] = static_cast<int>(orbit.size());
      orbit.push_back(image);
      transversal.push_back(compose(gens.generators[s], transversal[i]));
    }
  }

  std::set<Permutation> schreier;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (size_t s = 0; s < gens.generators.size(); ++s) {
      const int image = lobe_action[s][orbit[i]];
      Permutation h = compose(transversal[slot[image]].inverse(), compose(gens.generators[s], transversal[i]));
      if (!h.is_identity()) schreier.insert(std::move(h));
    }
  }
  return {n, std::vector<Permutation>(schreier.begin(), schreier.end()), GroupKind::stabilizer};
}

GeneratorSet restrict_to_lobe(const GeneratorSet& gens, const LobeDecomposition& d, int lobe_id) {
  if (lobe_id < 0 || lobe_id >= d.lobe_count()) {
    throw PreconditionError("invalid lobe id " + std::to_string(lobe_id));
  }
  const auto& vertices = d.lobes[lobe_id].vertices;
  GeneratorSet out{static_cast<int>(vertices.size()), {}, gens.kind};
  std::set<Permutation> seen;
  for (const Permutation& p : gens.generators) {
    std::vector<int> images(vertices.size());
    for (size_t i = 0; i < vertices.size(); ++i) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), p(vertices[i]));
      if (it == vertices.end() || *it != p(vertices[i])) {
        throw PreconditionError("generator does not stabilize lobe " + std::to_string(lobe_id));
      }
      images[i] = static_cast<int>(it - vertices.begin());
    }
    Permutation local = Permutation::unchecked(std::move(images));
    if (!local.is_identity() && seen.insert(local).second) out.generators.push_back(std::move(local));
  }
  return out;
}

BigInt group_order(const GeneratorSet& gens, int max_degree) {
  if (gens.degree > max_degree) {
    throw ResourceError("group degree " + std::to_string(gens.degree) + " exceeds the configured bound " +
                        std::to_string(max_degree));
  }
  return StabilizerChain(gens.degree, gens.generators).order();
}

}  // namespace lobekit
