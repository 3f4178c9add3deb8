#include "lobekit/transitivity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <tuple>

#include "lobekit/error.hpp"
#include "lobekit/lobe_tree.hpp"
#include "lobekit/symmetry.hpp"

namespace lobekit {

std::string_view to_string(LobeFailure f) {
  switch (f) {
    case LobeFailure::none:
      return "none";
    case LobeFailure::lobes_not_isomorphic:
      return "lobes_not_isomorphic";
    case LobeFailure::orbit_images:
      return "orbit_images";
    case LobeFailure::tau_not_constant:
      return "tau_not_constant";
  }
  return "unknown";
}

std::string_view to_string(EdgeCase c) {
  switch (c) {
    case EdgeCase::none:
      return "none";
    case EdgeCase::a:
      return "3a";
    case EdgeCase::b:
      return "3b";
    case EdgeCase::c:
      return "3c";
  }
  return "unknown";
}

namespace {

void require_connectivity_one(const Graph& g, const LobeDecomposition& d) {
  if (connectivity_class(g) != ConnectivityClass::connectivity_one) {
    throw PreconditionError("theorem checks need a connected graph with a cut vertex");
  }
  if (d.vertex_count != g.vertex_count() || static_cast<int>(d.edge_lobe.size()) != g.edge_count()) {
    throw PreconditionError("decomposition does not belong to this graph");
  }
}

void require_lobe(const LobeDecomposition& d, int lobe) {
  if (lobe < 0 || lobe >= d.lobe_count()) throw PreconditionError("invalid lobe id " + std::to_string(lobe));
}

/// Isomorphism from lobe `from` onto lobe `to` (same class) through the
/// class representative: entry p is the image of from.vertices[p].
std::vector<int> class_map(const LobeDecomposition& d, int from, int to) {
  const auto& from_sigma = d.classes.sigma[from];
  const auto& to_sigma = d.classes.sigma[to];
  const Lobe& lobe = d.lobes[from];
  std::vector<int> out(lobe.vertices.size());
  for (size_t i = 0; i < from_sigma.size(); ++i) out[lobe.local_index(from_sigma[i])] = to_sigma[i];
  return out;
}

/// Two-colouring with side 0 containing vertex 0 of each component, or
/// nullopt for non-bipartite graphs.
std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

struct LocalCounts {
  int vertex_orbits;
  int edge_orbits;
  int arc_orbits;
};

LocalCounts local_counts(const Graph& g) {
  GeneratorSet gens = automorphism_generators(g);
  return {orbit_partition(gens, OrbitDomain::vertices, g).cell_count(),
          orbit_partition(gens, OrbitDomain::edges, g).cell_count(),
          orbit_partition(gens, OrbitDomain::arcs, g).cell_count()};
}

std::vector<int> colors_on(std::span<const int> vertices, std::span<const int> color_of) {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (int v : vertices) out.push_back(color_of[v]);
  return out;
}

}  // namespace

TauTable tau_table(const Graph& g, const LobeDecomposition& d) {
  if (d.lobe_count() < 2) throw PreconditionError("tau functions need at least two lobes");
  const auto& cls = d.classes;
  TauTable t;
  t.values.resize(cls.class_count());
  t.constant.resize(cls.class_count());
  for (int k = 0; k < cls.class_count(); ++k) {
    t.values[k].assign(cls.orbit_count[k], std::vector<int>(g.vertex_count(), 0));
  }
  for (int l = 0; l < d.lobe_count(); ++l) {
    const int k = cls.class_of[l];
    const auto& vs = d.lobes[l].vertices;
    for (size_t i = 0; i < vs.size(); ++i) ++t.values[k][cls.label[l][i]][vs[i]];
  }
  for (int k = 0; k < cls.class_count(); ++k) {
    for (const auto& row : t.values[k]) {
      t.constant[k].push_back(std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) == row.end());
    }
  }
  return t;
}

DirectCounts classify_direct(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("classification needs a connected graph");
  GeneratorSet gens = automorphism_generators(g);
  DirectCounts out;
  out.vertex_orbits = orbit_partition(gens, OrbitDomain::vertices, g).cell_count();
  out.edge_orbits = orbit_partition(gens, OrbitDomain::edges, g).cell_count();
  out.arc_orbits = orbit_partition(gens, OrbitDomain::arcs, g).cell_count();
  if (connectivity_class(g) == ConnectivityClass::connectivity_one) {
    LobeDecomposition d = decompose(g);
    out.lobe_orbits = orbit_partition(gens, OrbitDomain::lobes, g, &d).cell_count();
  }
  out.group_order = group_order(gens);
  return out;
}

VertexVerdict is_vertex_transitive_thm(const Graph& g, const LobeDecomposition& d, const TauTable& tau) {
  require_connectivity_one(g, d);
  VertexVerdict out;
  for (int k = 0; k < tau.class_count(); ++k) {
    for (int j = 0; j < tau.orbit_count(k); ++j) {
      const auto& row = tau.values[k][j];
      for (int v = 1; v < g.vertex_count(); ++v) {
        if (row[v] != row[0]) {
          out.k = k;
          out.j = j;
          out.u = 0;
          out.v = v;
          return out;
        }
      }
    }
  }
  out.holds = true;
  return out;
}

LobeVerdict is_lobe_transitive_thm(const Graph& g, const LobeDecomposition& d, int base_lobe) {
  require_connectivity_one(g, d);
  require_lobe(d, base_lobe);
  LobeVerdict out;
  const auto& cls = d.classes;
  for (int l = 0; l < d.lobe_count(); ++l) {
    if (cls.class_of[l] != cls.class_of[base_lobe]) {
      out.failure = LobeFailure::lobes_not_isomorphic;
      out.lobe_pair = {base_lobe, l};
      return out;
    }
  }

  GeneratorSet gens = automorphism_generators(g);
  OrbitPartition p = orbit_partition(gens, OrbitDomain::vertices, g);
  out.p_orbits = p.cells;

  // The stabilizer maps the base lobe onto itself, so its orbits through
  // base vertices stay inside the lobe. Sorted vertex order numbers them by
  // minimal element.
  GeneratorSet stab = lobe_stabilizer(g, gens, d, base_lobe);
  OrbitPartition stab_orbits = orbit_partition(stab, OrbitDomain::vertices, g);
  const auto& base_vs = d.lobes[base_lobe].vertices;
  std::vector<int> q_of_cell(stab_orbits.cell_count(), -1);
  std::vector<int> q_of_local(base_vs.size());
  for (size_t i = 0; i < base_vs.size(); ++i) {
    int& q = q_of_cell[stab_orbits.cell_of[base_vs[i]]];
    if (q < 0) {
      q = static_cast<int>(out.q_orbits.size());
      out.q_orbits.emplace_back();
    }
    out.q_orbits[q].push_back(base_vs[i]);
    q_of_local[i] = q;
  }

  const Graph base_graph = lobe_subgraph(g, d.lobes[base_lobe]);
  const std::vector<int> base_colors = colors_on(base_vs, p.cell_of);
  out.tau.assign(out.q_orbits.size(), std::vector<int>(g.vertex_count(), 0));
  for (int l = 0; l < d.lobe_count(); ++l) {
    const auto& vs = d.lobes[l].vertices;
    const Graph lobe_graph = lobe_subgraph(g, d.lobes[l]);
    const std::vector<int> lobe_colors = colors_on(vs, p.cell_of);
    auto iso = find_isomorphism(base_graph, base_colors, lobe_graph, lobe_colors);
    if (!iso) {
      // No reference isomorphism keeps every Q_j inside the orbit it came
      // from; report where the class isomorphism leaves it.
      const auto m = class_map(d, base_lobe, l);
      for (size_t i = 0; i < m.size(); ++i) {
        if (p.cell_of[m[i]] != p.cell_of[base_vs[i]]) {
          out.failure = LobeFailure::orbit_images;
          out.i = p.cell_of[m[i]];
          out.j = q_of_local[i];
          out.v = m[i];
          return out;
        }
      }
      // The class map itself respects the orbits; the coloured search
      // cannot have missed it.
      throw Error("internal: orbit-respecting lobe isomorphism not found");
    }
    for (size_t i = 0; i < iso->size(); ++i) ++out.tau[q_of_local[i]][vs[(*iso)[i]]];
  }

  for (int i = 0; i < p.cell_count(); ++i) {
    const auto& cell = p.cells[i];
    for (size_t j = 0; j < out.tau.size(); ++j) {
      for (int v : cell) {
        if (out.tau[j][v] != out.tau[j][cell.front()]) {
          out.failure = LobeFailure::tau_not_constant;
          out.i = i;
          out.j = static_cast<int>(j);
          out.v = v;
          return out;
        }
      }
    }
  }
  // Positivity condition: with orbit-respecting reference maps, tau_j(v) > 0
  // places v in the orbit containing Q_j, and conversely by definition.
  out.holds = true;
  return out;
}

EdgeVerdict is_edge_transitive_thm(const Graph& g, const LobeDecomposition& d, int base_lobe) {
  require_connectivity_one(g, d);
  require_lobe(d, base_lobe);
  EdgeVerdict out;
  const auto& cls = d.classes;
  for (int k = 0; k < cls.class_count(); ++k) {
    const Graph rep = lobe_subgraph(g, d.lobes[cls.representatives[k]]);
    if (local_counts(rep).edge_orbits != 1) {
      out.reason = "lobe class " + std::to_string(k) + " is not edge-transitive";
      return out;
    }
  }
  if (cls.class_count() != 1) {
    out.reason = "lobes are not pairwise isomorphic";
    return out;
  }

  const VertexVerdict vt = is_vertex_transitive_thm(g, d, tau_table(g, d));
  const bool lobe_vt = cls.orbit_count[0] == 1;
  const auto& base_vs = d.lobes[base_lobe].vertices;

  if (vt.holds && lobe_vt) {
    const int count = static_cast<int>(d.lobes_of_vertex[0].size());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (static_cast<int>(d.lobes_of_vertex[v].size()) != count) {
        out.reason = "lobe count is not constant";
        return out;
      }
    }
    if (count < 2) {
      out.reason = "lobe count is below 2";
      return out;
    }
    out.holds = true;
    out.edge_case = EdgeCase::a;
    return out;
  }

  if (vt.holds) {
    const auto sides = two_coloring(lobe_subgraph(g, d.lobes[base_lobe]));
    if (!sides) {
      out.reason = "vertex-transitive graph with a non-vertex-transitive, non-bipartite lobe";
      return out;
    }
    std::vector<std::vector<long long>> tau(2, std::vector<long long>(g.vertex_count(), 0));
    for (int l = 0; l < d.lobe_count(); ++l) {
      const auto m = class_map(d, base_lobe, l);
      for (size_t i = 0; i < m.size(); ++i) ++tau[(*sides)[i]][m[i]];
    }
    for (int j = 0; j < 2; ++j) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (tau[j][v] != tau[j][0]) {
          out.reason = "side counts are not constant";
          return out;
        }
      }
    }
    out.holds = true;
    out.edge_case = EdgeCase::b;
    out.m = std::make_pair(tau[0][0], tau[1][0]);
    return out;
  }

  const auto sides = two_coloring(g);
  if (!sides) {
    out.reason = "graph is neither vertex-transitive nor bipartite";
    return out;
  }
  const Graph base_graph = lobe_subgraph(g, d.lobes[base_lobe]);
  const std::vector<int> base_colors = colors_on(base_vs, *sides);
  std::vector<std::vector<long long>> tau(2, std::vector<long long>(g.vertex_count(), 0));
  for (int l = 0; l < d.lobe_count(); ++l) {
    const auto& vs = d.lobes[l].vertices;
    auto iso = find_isomorphism(base_graph, base_colors, lobe_subgraph(g, d.lobes[l]), colors_on(vs, *sides));
    if (iso) {
      for (size_t i = 0; i < iso->size(); ++i) ++tau[base_colors[i]][vs[(*iso)[i]]];
    } else {
      const auto m = class_map(d, base_lobe, l);
      for (size_t i = 0; i < m.size(); ++i) ++tau[base_colors[i]][m[i]];
    }
  }
  std::array<long long, 2> m{-1, -1};
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int i = (*sides)[v];
    if (tau[1 - i][v] != 0) {
      out.reason = "vertex " + std::to_string(v) + " lies in an image of the opposite side";
      return out;
    }
    if (m[i] < 0) m[i] = tau[i][v];
    if (tau[i][v] != m[i]) {
      out.reason = "side counts are not constant";
      return out;
    }
  }
  if (std::max(m[0], m[1]) < 2) {
    out.reason = "both side counts are below 2";
    return out;
  }
  out.holds = true;
  out.edge_case = EdgeCase::c;
  out.m = std::make_pair(m[0], m[1]);
  return out;
}

ArcVerdict is_arc_transitive_thm(const Graph& g, const LobeDecomposition& d) {
  require_connectivity_one(g, d);
  ArcVerdict out;
  const auto& cls = d.classes;
  for (int k = 0; k < cls.class_count(); ++k) {
    const Graph rep = lobe_subgraph(g, d.lobes[cls.representatives[k]]);
    if (local_counts(rep).arc_orbits != 1) {
      out.reason = "lobe class " + std::to_string(k) + " is not arc-transitive";
      return out;
    }
  }
  if (cls.class_count() != 1) {
    out.reason = "lobes are not pairwise isomorphic";
    return out;
  }
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (d.lobes_of_vertex[v].size() != d.lobes_of_vertex[0].size()) {
      out.reason = "lobe count is not constant";
      return out;
    }
  }
  out.holds = true;
  return out;
}

std::optional<std::pair<int, int>> tree_edge_transitivity(const Graph& g) {
  if (g.edge_count() < 1 || g.edge_count() != g.vertex_count() - 1 || !is_connected(g)) {
    throw PreconditionError("tree_edge_transitivity needs a tree with at least one edge");
  }
  auto pair_of = [&](const Edge& e) {
    const int a = g.degree(e.u), b = g.degree(e.v);
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  const auto first = pair_of(g.edges().front());
  for (const Edge& e : g.edges()) {
    if (pair_of(e) != first) return std::nullopt;
  }
  return std::make_pair(first.first, first.second);
}

long long k_arc_orbit_count(const Graph& g, int k, long long max_arcs) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (!is_connected(g)) throw PreconditionError("k-arc orbits need a connected graph");
  const int len = k + 1;

  // Depth-first enumeration in ascending neighbour order yields the walks
  // already sorted lexicographically.
  std::vector<int> arcs;
  std::vector<int> walk;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == len) {
      if (static_cast<long long>(arcs.size()) / len >= max_arcs) {
        throw ResourceError("more than " + std::to_string(max_arcs) + " " + std::to_string(k) + "-arcs");
      }
      arcs.insert(arcs.end(), walk.begin(), walk.end());
      return;
    }
    const int last = walk.back();
    const int before = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    for (int w : g.neighbors(last)) {
      if (w == before) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  const long long count = static_cast<long long>(arcs.size()) / len;
  if (count == 0) throw PreconditionError("graph has no " + std::to_string(k) + "-arcs");

  auto arc_at = [&](long long i) { return std::span<const int>(arcs.data() + i * len, len); };
  auto index_of = [&](std::span<const int> target) {
    long long lo = 0;
    long long hi = count;
    while (lo < hi) {
      const long long mid = (lo + hi) / 2;
      auto a = arc_at(mid);
      if (std::lexicographical_compare(a.begin(), a.end(), target.begin(), target.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  std::vector<long long> parent(count);
  std::iota(parent.begin(), parent.end(), 0LL);
  auto find = [&](long long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  long long orbits = count;
  GeneratorSet gens = automorphism_generators(g);
  std::vector<int> image(len);
  for (const Permutation& p : gens.generators) {
    for (long long i = 0; i < count; ++i) {
      auto a = arc_at(i);
      for (int t = 0; t < len; ++t) image[t] = p(a[t]);
      const long long j = index_of(image);
      long long ra = find(i);
      long long rb = find(j);
      if (ra != rb) {
        parent[std::max(ra, rb)] = std::min(ra, rb);
        --orbits;
      }
    }
  }
  return orbits;
}

Extension extend_lobe_isomorphism(const Graph& g, const LobeDecomposition& d, int source, int target,
                                  std::span<const int> ball_map, int radius, int target_radius) {
  require_lobe(d, source);
  require_lobe(d, target);
  const int n = g.vertex_count();
  if (static_cast<int>(ball_map.size()) != n) throw PreconditionError("ball map must have one entry per vertex");
  if (radius < 0 || target_radius < radius) throw PreconditionError("need 0 <= radius <= target radius");

  const auto dist_source = lobe_distances(d, source);
  const auto dist_target = lobe_distances(d, target);
  const int reach = *std::max_element(dist_source.begin(), dist_source.end());
  if (target_radius > reach) {
    throw PreconditionError("target radius " + std::to_string(target_radius) + " exceeds the lobe eccentricity " +
                            std::to_string(reach));
  }

  // The map must be an isomorphism of the two radius-r balls taking the
  // source lobe onto the target lobe.
  const LobeBall from = lobe_ball(g, d, source, radius);
  const LobeBall to = lobe_ball(g, d, target, radius);
  std::vector<char> in_from(n, 0);
  std::vector<char> in_to(n, 0);
  for (int v : from.to_global) in_from[v] = 1;
  for (int v : to.to_global) in_to[v] = 1;
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if ((ball_map[v] >= 0) != static_cast<bool>(in_from[v])) {
      throw PreconditionError("ball map must be defined exactly on the source ball");
    }
    if (ball_map[v] < 0) continue;
    const int w = ball_map[v];
    if (w >= n || !in_to[w] || hit[w]) throw PreconditionError("ball map is not a bijection onto the target ball");
    hit[w] = 1;
  }
  if (from.to_global.size() != to.to_global.size() || from.graph.edge_count() != to.graph.edge_count()) {
    throw PreconditionError("ball map is not an isomorphism");
  }
  for (const Edge& e : from.graph.edges()) {
    if (!g.has_edge(ball_map[from.to_global[e.u]], ball_map[from.to_global[e.v]])) {
      throw PreconditionError("ball map is not an isomorphism");
    }
  }
  for (int v : d.lobes[source].vertices) {
    if (d.lobes[target].local_index(ball_map[v]) < 0) {
      throw PreconditionError("ball map does not take the source lobe onto the target lobe");
    }
  }

  Extension out;
  out.map.assign(ball_map.begin(), ball_map.end());
  out.radius = radius;
  const LobeSystem system = lobe_system(g, d);
  RootedCodes codes(system);
  const auto& cls = d.classes;

  for (int shell = radius + 1; shell <= target_radius; ++shell) {
    const int budget = target_radius - shell;
    for (int parent = 0; parent < d.lobe_count(); ++parent) {
      if (dist_source[parent] != shell - 1) continue;
      for (int v : d.lobes[parent].vertices) {
        const int w = out.map[v];
        std::vector<int> new_at_v;
        std::vector<int> new_at_w;
        for (int l : d.lobes_of_vertex[v]) {
          if (dist_source[l] == shell) new_at_v.push_back(l);
        }
        for (int l : d.lobes_of_vertex[w]) {
          if (dist_target[l] == shell) new_at_w.push_back(l);
        }
        if (new_at_v.empty() && new_at_w.empty()) continue;

        struct Key {
          int cls;
          int label;
          int code;
          int lobe;
        };
        auto keys_for = [&](const std::vector<int>& lobes, int x) {
          std::vector<Key> keys;
          for (int l : lobes) {
            keys.push_back({cls.class_of[l], cls.label[l][d.lobes[l].local_index(x)],
                            codes.branch_code(l, x, budget), l});
          }
          std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
            return std::tie(a.cls, a.label, a.code, a.lobe) < std::tie(b.cls, b.label, b.code, b.lobe);
          });
          return keys;
        };
        const auto kv = keys_for(new_at_v, v);
        const auto kw = keys_for(new_at_w, w);
        bool tau_match = kv.size() == kw.size();
        for (size_t i = 0; tau_match && i < kv.size(); ++i) {
          tau_match = kv[i].cls == kw[i].cls && kv[i].label == kw[i].label;
        }
        if (!tau_match) {
          out.failure = ShellFailure{shell, v, "tau counts differ from those at vertex " + std::to_string(w)};
          return out;
        }
        for (size_t i = 0; i < kv.size(); ++i) {
          if (kv[i].code != kw[i].code) {
            out.failure = ShellFailure{shell, v, "lobes at vertex " + std::to_string(v) +
                                                     " have no counterpart with the same descendants at " +
                                                     std::to_string(w)};
            return out;
          }
        }
        for (size_t i = 0; i < kv.size(); ++i) {
          const int a = kv[i].lobe;
          const int b = kw[i].lobe;
          const auto colors_a = codes.lobe_colors(a, v, budget - 1);
          const auto colors_b = codes.lobe_colors(b, w, budget - 1);
          auto local = find_isomorphism(system.shapes[system.shape_of[a]], colors_a,
                                        system.shapes[system.shape_of[b]], colors_b);
          if (!local) throw Error("internal: equal branch codes without an isomorphism");
          const auto& va = system.lobe_vertices[a];
          const auto& vb = system.lobe_vertices[b];
          for (size_t p = 0; p < va.size(); ++p) out.map[va[p]] = vb[(*local)[p]];
        }
      }
    }
    out.radius = shell;
  }
  return out;
}

ClassificationReport classify(const Graph& g) {
  ClassificationReport r;
  r.direct = classify_direct(g);
  r.connectivity = connectivity_class(g);
  r.is_tree = g.vertex_count() >= 2 && g.edge_count() == g.vertex_count() - 1;
  if (r.is_tree) r.tree = tree_edge_transitivity(g);
  if (g.edge_count() == 0) return r;
  const LobeDecomposition d = decompose(g);
  r.lobe_count = d.lobe_count();
  if (r.connectivity != ConnectivityClass::connectivity_one) return r;

  r.vertex = is_vertex_transitive_thm(g, d, tau_table(g, d));
  r.lobe = is_lobe_transitive_thm(g, d);
  r.edge = is_edge_transitive_thm(g, d);
  r.arc = is_arc_transitive_thm(g, d);
  r.consistent = r.vertex->holds == (r.direct.vertex_orbits == 1) &&
                 r.lobe->holds == (r.direct.lobe_orbits == 1) && r.edge->holds == (r.direct.edge_orbits == 1) &&
                 r.arc->holds == (r.direct.arc_orbits == 1);
  if (r.is_tree) {
    r.consistent = r.consistent && r.tree.has_value() == (r.direct.edge_orbits == 1);
  }
  return r;
}

}  // namespace lobekit
