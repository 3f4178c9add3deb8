#include "lobekit/lobe_tree.hpp"

#include <algorithm>

#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"
#include "lobekit/symmetry.hpp"

namespace lobekit {

int LobeSystem::local_position(int lobe, int v) const {
  const auto& vs = lobe_vertices[lobe];
  auto it = std::find(vs.begin(), vs.end(), v);
  return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
}

void LobeSystem::index_vertices() {
  vertex_offsets.assign(vertex_count + 1, 0);
  for (const auto& vs : lobe_vertices) {
    for (int v : vs) ++vertex_offsets[v + 1];
  }
  for (int v = 0; v < vertex_count; ++v) vertex_offsets[v + 1] += vertex_offsets[v];
  vertex_lobes.assign(vertex_offsets.back(), 0);
  std::vector<int> fill(vertex_offsets.begin(), vertex_offsets.end() - 1);
  for (int l = 0; l < lobe_count(); ++l) {
    for (int v : lobe_vertices[l]) vertex_lobes[fill[v]++] = l;
  }
}

namespace {

using ShapeIds = std::map<std::pair<int, std::vector<Edge>>, int>;

void add_lobes(LobeSystem& s, ShapeIds& shape_ids, const Graph& g, const LobeDecomposition& d, int offset) {
  for (const Lobe& lobe : d.lobes) {
    Graph local = lobe_subgraph(g, lobe);
    std::pair<int, std::vector<Edge>> key{local.vertex_count(), {local.edges().begin(), local.edges().end()}};
    auto [it, inserted] = shape_ids.emplace(std::move(key), static_cast<int>(s.shapes.size()));
    if (inserted) s.shapes.push_back(std::move(local));
    s.shape_of.push_back(it->second);
    std::vector<int> vs = lobe.vertices;
    for (int& v : vs) v += offset;
    s.lobe_vertices.push_back(std::move(vs));
  }
}

struct TreeCentre {
  bool is_lobe = true;
  int id = 0;      // lobe id or vertex
  int radius = 0;  // block-cut tree steps to the farthest node
};

// Centre of the block-cut tree. Leaves are lobes and the tree is
// bipartite, so the diameter is even and the centre is a single node.
TreeCentre tree_centre(const LobeDecomposition& d) {
  const int lobes = d.lobe_count();
  const int nodes = lobes + static_cast<int>(d.cut_vertices.size());
  std::vector<std::vector<int>> adj(nodes);
  for (auto [lobe, v] : d.tree_edges) {
    const int c = lobes + static_cast<int>(std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), v) -
                                           d.cut_vertices.begin());
    adj[lobe].push_back(c);
    adj[c].push_back(lobe);
  }
  auto bfs = [&](int start, std::vector<int>& parent) {
    std::vector<int> dist(nodes, -1);
    parent.assign(nodes, -1);
    std::vector<int> queue = {start};
    dist[start] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (int w : adj[queue[i]]) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[i]] + 1;
          parent[w] = queue[i];
          queue.push_back(w);
        }
      }
    }
    return std::make_pair(queue.back(), dist[queue.back()]);
  };
  std::vector<int> parent;
  const int x = bfs(0, parent).first;
  const auto [y, length] = bfs(x, parent);
  int centre = y;
  for (int i = 0; i < length / 2; ++i) centre = parent[centre];
  TreeCentre out;
  out.is_lobe = centre < lobes;
  out.id = out.is_lobe ? centre : d.cut_vertices[centre - lobes];
  out.radius = length / 2;
  return out;
}

}  // namespace

LobeSystem lobe_system(const Graph& g, const LobeDecomposition& d) {
  LobeSystem s;
  s.vertex_count = g.vertex_count();
  ShapeIds shape_ids;
  add_lobes(s, shape_ids, g, d, 0);
  s.index_vertices();
  return s;
}

bool block_tree_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (!is_connected(a) || !is_connected(b)) throw PreconditionError("block tree comparison needs connected graphs");
  if (a.edge_count() == 0) return true;
  const LobeDecomposition da = decompose(a);
  const LobeDecomposition db = decompose(b);
  if (da.lobe_count() != db.lobe_count() || da.cut_vertices.size() != db.cut_vertices.size()) return false;
  const TreeCentre ca = tree_centre(da);
  const TreeCentre cb = tree_centre(db);
  if (ca.is_lobe != cb.is_lobe || ca.radius != cb.radius) return false;

  // One system over both graphs so that codes are comparable.
  LobeSystem s;
  s.vertex_count = a.vertex_count() + b.vertex_count();
  ShapeIds shape_ids;
  add_lobes(s, shape_ids, a, da, 0);
  add_lobes(s, shape_ids, b, db, a.vertex_count());
  s.index_vertices();
  RootedCodes codes(s);
  if (ca.is_lobe) {
    // Lobe-to-lobe steps are two tree steps.
    const int shells = ca.radius / 2;
    return codes.ball_code(ca.id, shells) == codes.ball_code(da.lobe_count() + cb.id, shells);
  }
  const int budget = (ca.radius - 1) / 2;
  return codes.vertex_code(ca.id, -1, budget) == codes.vertex_code(a.vertex_count() + cb.id, -1, budget);
}

int RootedCodes::shape_code(int shape, std::vector<int> colors) {
  std::pair<int, std::vector<int>> key{shape, std::move(colors)};
  auto it = shape_codes_.find(key);
  if (it != shape_codes_.end()) return it->second;
  // Codes of different shapes with equal certificates must coincide, so
  // intern through the certificate, not the key.
  Certificate cert = canonical_certificate(system_.shapes[shape], key.second);
  auto [cit, inserted] = certificate_codes_.emplace(std::move(cert.bytes), static_cast<int>(certificate_codes_.size()));
  shape_codes_.emplace(std::move(key), cit->second);
  return cit->second;
}

std::vector<int> RootedCodes::lobe_colors(int lobe, int entry, int budget) {
  const auto& vs = system_.lobe_vertices[lobe];
  std::vector<int> colors(vs.size(), 1);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == entry) {
      colors[i] = 0;
    } else if (budget >= 0) {
      colors[i] = 1 + vertex_code(vs[i], lobe, budget);
    }
  }
  return colors;
}

int RootedCodes::vertex_code(int v, int excluded_lobe, int budget) {
  std::vector<int> items;
  for (int l : system_.lobes_at(v)) {
    if (l != excluded_lobe) items.push_back(branch_code(l, v, budget));
  }
  std::sort(items.begin(), items.end());
  auto [it, inserted] = multiset_codes_.emplace(std::move(items), static_cast<int>(multiset_codes_.size()));
  return it->second;
}

int RootedCodes::branch_code(int lobe, int entry, int budget) {
  if (budget < 0) throw PreconditionError("branch budget must be non-negative");
  const long long key = (static_cast<long long>(lobe) * system_.vertex_count + entry) * 64 + budget;
  if (budget < 64) {
    auto it = branch_memo_.find(key);
    if (it != branch_memo_.end()) return it->second;
  }
  const int code = shape_code(system_.shape_of[lobe], lobe_colors(lobe, entry, budget - 1));
  if (budget < 64) branch_memo_.emplace(key, code);
  return code;
}

int RootedCodes::ball_code(int lobe, int radius) {
  if (radius < 0) throw PreconditionError("ball radius must be non-negative");
  return shape_code(system_.shape_of[lobe], lobe_colors(lobe, -1, radius - 1));
}

}  // namespace lobekit
