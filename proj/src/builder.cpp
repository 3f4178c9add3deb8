#include "lobekit/builder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"

namespace lobekit {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw InputError("invalid build spec: " + what); }

std::string cell_text(const std::vector<int>& cell) {
  std::string out = "{";
  for (size_t i = 0; i < cell.size(); ++i) out += (i ? "," : "") + std::to_string(cell[i]);
  return out + "}";
}

}  // namespace

long long BuildSpec::lobe_count(int k) const {
  return std::accumulate(mu[k].begin(), mu[k].end(), 0LL);
}

BuildSpec validate_spec(const RawBuildSpec& raw) {
  if (raw.n < 2) invalid("lambda0 needs at least two vertices");
  BuildSpec spec;
  try {
    spec.lambda0 = make_graph(raw.n, raw.edges);
  } catch (const InputError& e) {
    invalid(std::string("lambda0: ") + e.what());
  }
  const ConnectivityClass cc = connectivity_class(spec.lambda0);
  if (cc != ConnectivityClass::biconnected && cc != ConnectivityClass::single_k2) {
    invalid("lambda0 is not biconnected (" + std::string(to_string(cc)) + ")");
  }
  const int n = raw.n;

  if (raw.h) {
    spec.h = {n, {}, GroupKind::user_supplied};
    for (size_t i = 0; i < raw.h->size(); ++i) {
      const auto& images = (*raw.h)[i];
      if (static_cast<int>(images.size()) != n) {
        invalid("generator " + std::to_string(i + 1) + " has " + std::to_string(images.size()) +
                " images, expected " + std::to_string(n));
      }
      std::optional<Permutation> p;
      try {
        p = Permutation(images);
      } catch (const InputError& e) {
        invalid("generator " + std::to_string(i + 1) + ": " + e.what());
      }
      if (!is_automorphism(spec.lambda0, *p)) {
        invalid("generator " + std::to_string(i + 1) + " is not an automorphism of lambda0");
      }
      spec.h.generators.push_back(std::move(*p));
    }
  } else {
    spec.h = automorphism_generators(spec.lambda0);
    spec.h_is_full = true;
  }
  const OrbitPartition q = orbit_partition(spec.h, OrbitDomain::vertices, spec.lambda0);
  spec.q = q.cells;
  spec.q_of = q.cell_of;

  spec.r_of.assign(n, -1);
  for (size_t k = 0; k < raw.r_partition.size(); ++k) {
    std::vector<int> cell = raw.r_partition[k];
    if (cell.empty()) invalid("cell " + std::to_string(k + 1) + " of r_partition is empty");
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
      if (v < 0 || v >= n) invalid("r_partition mentions vertex " + std::to_string(v) + " outside lambda0");
      if (spec.r_of[v] >= 0) invalid("vertex " + std::to_string(v) + " appears twice in r_partition");
      spec.r_of[v] = static_cast<int>(k);
    }
    spec.r.push_back(std::move(cell));
  }
  for (int v = 0; v < n; ++v) {
    if (spec.r_of[v] < 0) invalid("vertex " + std::to_string(v) + " is missing from r_partition");
  }
  for (size_t j = 0; j < spec.q.size(); ++j) {
    for (int v : spec.q[j]) {
      if (spec.r_of[v] != spec.r_of[spec.q[j].front()]) {
        invalid("orbit Q" + std::to_string(j + 1) + " = " + cell_text(spec.q[j]) + " is split by r_partition");
      }
    }
  }

  const int kk = spec.cell_count();
  const int jj = spec.orbit_count();
  spec.mu.assign(kk, std::vector<long long>(jj, 0));
  std::vector<char> seen_k(kk, 0);
  for (const auto& entry : raw.mu) {
    if (entry.k < 1 || entry.k > kk) invalid("mu entry for k=" + std::to_string(entry.k) + " outside 1.." + std::to_string(kk));
    if (seen_k[entry.k - 1]) invalid("duplicate mu entry for k=" + std::to_string(entry.k));
    seen_k[entry.k - 1] = 1;
    std::set<long long> seen_j;
    for (auto [j, value] : entry.values) {
      if (j < 1 || j > jj) invalid("mu_" + std::to_string(entry.k) + " names orbit " + std::to_string(j) + " outside 1.." + std::to_string(jj));
      if (!seen_j.insert(j).second) invalid("mu_" + std::to_string(entry.k) + " lists orbit " + std::to_string(j) + " twice");
      if (value < 0) invalid("mu_" + std::to_string(entry.k) + "(" + std::to_string(j) + ") is negative");
      spec.mu[entry.k - 1][j - 1] = value;
    }
  }
  for (int k = 0; k < kk; ++k) {
    for (int j = 0; j < jj; ++j) {
      const bool inside = spec.r_of[spec.q[j].front()] == k;
      const bool positive = spec.mu[k][j] > 0;
      if (inside && !positive) {
        invalid("Q" + std::to_string(j + 1) + " lies in R" + std::to_string(k + 1) + " so mu_" + std::to_string(k + 1) +
                "(" + std::to_string(j + 1) + ") must be positive");
      }
      if (!inside && positive) {
        invalid("Q" + std::to_string(j + 1) + " is not contained in R" + std::to_string(k + 1) + " so mu_" +
                std::to_string(k + 1) + "(" + std::to_string(j + 1) + ") must be 0");
      }
    }
  }
  bool branching = false;
  for (int k = 0; k < kk; ++k) branching = branching || spec.lobe_count(k) >= 2;
  if (!branching) invalid("every cell has total multiplicity below 2, which describes a single lobe");
  if (raw.depth < 0 || raw.depth > 1'000'000) invalid("depth must be a non-negative integer");
  spec.depth = static_cast<int>(raw.depth);
  return spec;
}

BuildSpec with_depth(BuildSpec spec, int depth) {
  if (depth < 0) throw PreconditionError("depth must be non-negative");
  spec.depth = depth;
  return spec;
}

BuildResult build_truncation(const BuildSpec& spec, const BuildOptions& options) {
  const int n = spec.lambda0.vertex_count();
  if (n > options.max_vertices) throw ResourceError("lambda0 alone exceeds the vertex cap");
  BuildResult out;
  out.depth = spec.depth;

  // Where each vertex first appeared: (lobe, lambda0 position).
  std::vector<std::pair<int, int>> origin;
  std::vector<Edge> edges;
  std::mt19937_64 rng(options.attach_seed.value_or(0));

  auto add_lobe = [&](int attach_vertex, int attach_position, int stage) {
    const long long needed = static_cast<long long>(origin.size()) + n - (attach_vertex >= 0 ? 1 : 0);
    if (needed > options.max_vertices) {
      throw ResourceError("truncation exceeds the vertex cap of " + std::to_string(options.max_vertices));
    }
    const int lobe = out.lobe_count();
    std::vector<int> sigma(n);
    for (int p = 0; p < n; ++p) {
      if (p == attach_position) {
        sigma[p] = attach_vertex;
        continue;
      }
      sigma[p] = static_cast<int>(origin.size());
      origin.emplace_back(lobe, p);
      out.vertex_depth.push_back(stage);
    }
    for (const Edge& e : spec.lambda0.edges()) edges.push_back({sigma[e.u], sigma[e.v]});
    out.lobe_sigma.push_back(std::move(sigma));
    out.lobe_depth.push_back(stage);
  };

  add_lobe(-1, -1, 0);
  std::vector<int> frontier(n);
  std::iota(frontier.begin(), frontier.end(), 0);
  for (int stage = 1; stage <= spec.depth; ++stage) {
    const int first_new = static_cast<int>(origin.size());
    for (int w : frontier) {
      const int p = origin[w].second;
      const int j = spec.q_of[p];
      const int k = spec.r_of[p];
      for (int l = 0; l < spec.orbit_count(); ++l) {
        const long long copies = spec.mu[k][l] - (l == j ? 1 : 0);
        for (long long c = 0; c < copies; ++c) {
          const auto& cell = spec.q[l];
          int attach = cell.front();
          if (options.attach_seed) attach = cell[std::uniform_int_distribution<size_t>(0, cell.size() - 1)(rng)];
          add_lobe(w, attach, stage);
        }
      }
    }
    frontier.resize(origin.size() - first_new);
    std::iota(frontier.begin(), frontier.end(), first_new);
    if (frontier.empty()) break;
  }
  out.graph = make_graph(static_cast<int>(origin.size()), edges);
  return out;
}

LobeSystem lobe_system(const BuildResult& result, const BuildSpec& spec) {
  LobeSystem s;
  s.vertex_count = result.graph.vertex_count();
  s.shapes.push_back(spec.lambda0);
  s.shape_of.assign(result.lobe_count(), 0);
  s.lobe_vertices = result.lobe_sigma;
  s.index_vertices();
  return s;
}

namespace {

void check_pair(const BuildResult& result, const BuildSpec& spec) {
  const int n = spec.lambda0.vertex_count();
  const int total = result.graph.vertex_count();
  if (static_cast<int>(result.vertex_depth.size()) != total ||
      result.lobe_depth.size() != result.lobe_sigma.size()) {
    throw PreconditionError("build result bookkeeping is inconsistent");
  }
  for (const auto& sigma : result.lobe_sigma) {
    if (static_cast<int>(sigma.size()) != n) throw PreconditionError("build result does not match the spec's lambda0");
    for (int v : sigma) {
      if (v < 0 || v >= total) throw PreconditionError("registered lobe maps outside the truncation");
    }
  }
}

}  // namespace

InteriorReport verify_interior(const BuildResult& result, const BuildSpec& spec) {
  check_pair(result, spec);
  const LobeSystem system = lobe_system(result, spec);
  InteriorReport report;
  auto violation = [&](std::string text) {
    report.ok = false;
    if (report.violations.size() < 20) report.violations.push_back(std::move(text));
  };
  std::vector<long long> counts(spec.orbit_count());
  for (int v = 0; v < result.graph.vertex_count(); ++v) {
    auto lobes = system.lobes_at(v);
    if (result.vertex_depth[v] >= result.depth) {
      ++report.frontier_vertices;
      if (lobes.size() != 1) {
        violation("frontier vertex " + std::to_string(v) + " lies in " + std::to_string(lobes.size()) + " lobes");
      }
      continue;
    }
    ++report.interior_vertices;
    std::fill(counts.begin(), counts.end(), 0);
    int k = -1;
    for (int l : lobes) {
      const int p = system.local_position(l, v);
      if (k < 0) k = spec.r_of[p];
      if (spec.r_of[p] != k) {
        violation("vertex " + std::to_string(v) + " is the image of points in different cells of R");
      }
      ++counts[spec.q_of[p]];
    }
    if (k < 0) {
      violation("vertex " + std::to_string(v) + " lies in no lobe");
      continue;
    }
    for (int j = 0; j < spec.orbit_count(); ++j) {
      if (counts[j] != spec.mu[k][j]) {
        violation("vertex " + std::to_string(v) + ": " + std::to_string(counts[j]) + " lobes with it in an image of Q" +
                  std::to_string(j + 1) + ", expected mu_" + std::to_string(k + 1) + "(" + std::to_string(j + 1) +
                  ") = " + std::to_string(spec.mu[k][j]));
      }
    }
  }
  return report;
}

bool lobes_match_lambda0(const BuildResult& result, const BuildSpec& spec) {
  check_pair(result, spec);
  const Graph& g = result.graph;
  const int n = spec.lambda0.vertex_count();
  const Certificate reference = canonical_certificate(spec.lambda0);
  // Each lobe's induced subgraph, read back through its map; identical local
  // graphs share one certificate computation.
  std::map<std::vector<Edge>, bool> verdict;
  std::vector<int> position(g.vertex_count(), -1);
  std::set<int> distinct;
  for (const auto& sigma : result.lobe_sigma) {
    distinct.clear();
    for (int p = 0; p < n; ++p) {
      position[sigma[p]] = p;
      distinct.insert(sigma[p]);
    }
    if (static_cast<int>(distinct.size()) != n) return false;
    std::vector<Edge> local;
    for (int p = 0; p < n; ++p) {
      for (int w : g.neighbors(sigma[p])) {
        const int q = position[w];
        if (q > p) local.push_back({p, q});
      }
    }
    for (int p = 0; p < n; ++p) position[sigma[p]] = -1;
    std::sort(local.begin(), local.end());
    auto it = verdict.find(local);
    if (it == verdict.end()) {
      // The map must reproduce lambda0's edges exactly, not just up to
      // isomorphism.
      const bool same = std::equal(local.begin(), local.end(), spec.lambda0.edges().begin(),
                                   spec.lambda0.edges().end()) &&
                        canonical_certificate(make_graph(n, local)) == reference;
      it = verdict.emplace(std::move(local), same).first;
    }
    if (!it->second) return false;
  }
  return true;
}

LimitReport classify_limit(const BuildSpec& spec) {
  const Graph& lambda0 = spec.lambda0;
  const int n = lambda0.vertex_count();
  LimitReport r;
  const GeneratorSet aut = automorphism_generators(lambda0);
  const OrbitPartition orbits = orbit_partition(aut, OrbitDomain::vertices, lambda0);
  r.lambda0_orbits = orbits.cells;
  r.lambda0_vertex_transitive = orbits.cell_count() == 1;
  r.lambda0_edge_transitive = orbit_partition(aut, OrbitDomain::edges, lambda0).cell_count() == 1;
  r.lambda0_arc_transitive = orbit_partition(aut, OrbitDomain::arcs, lambda0).cell_count() == 1;

  const int kk = spec.cell_count();
  for (int k = 0; k < kk; ++k) r.lobe_counts.push_back(spec.lobe_count(k));

  // Vertex-transitivity: the tau functions for the Aut(lambda0) orbit labels
  // must not depend on the vertex, i.e. on its cell of R.
  r.tau.assign(kk, std::vector<long long>(orbits.cell_count(), 0));
  for (int k = 0; k < kk; ++k) {
    for (int j = 0; j < spec.orbit_count(); ++j) r.tau[k][orbits.cell_of[spec.q[j].front()]] += spec.mu[k][j];
  }
  r.vertex_transitive = std::all_of(r.tau.begin(), r.tau.end(), [&](const auto& row) { return row == r.tau.front(); });

  const bool constant_count =
      std::all_of(r.lobe_counts.begin(), r.lobe_counts.end(), [&](long long c) { return c == r.lobe_counts.front(); });
  r.arc_transitive = r.lambda0_arc_transitive && constant_count;

  if (!r.lambda0_edge_transitive) {
    r.edge_reason = "lambda0 is not edge-transitive";
    return r;
  }
  if (r.vertex_transitive && r.lambda0_vertex_transitive) {
    // Constant tau over a single orbit means a constant lobe count, which
    // is at least 2 because some cell branches.
    r.edge_transitive = true;
    r.edge_case = EdgeCase::a;
    return r;
  }

  std::vector<int> side(n, -1);
  {
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : lambda0.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          r.edge_reason = "lambda0 is not bipartite";
          return r;
        }
      }
    }
  }

  if (r.vertex_transitive) {
    std::array<std::vector<long long>, 2> m{std::vector<long long>(kk, 0), std::vector<long long>(kk, 0)};
    for (int j = 0; j < spec.orbit_count(); ++j) {
      const int s = side[spec.q[j].front()];
      for (int v : spec.q[j]) {
        if (side[v] != s) {
          r.edge_reason = "orbit Q" + std::to_string(j + 1) + " meets both sides of lambda0";
          return r;
        }
      }
      for (int k = 0; k < kk; ++k) m[s][k] += spec.mu[k][j];
    }
    for (int s = 0; s < 2; ++s) {
      if (std::any_of(m[s].begin(), m[s].end(), [&](long long x) { return x != m[s].front(); })) {
        r.edge_reason = "side counts depend on the vertex";
        return r;
      }
    }
    r.edge_transitive = true;
    r.edge_case = EdgeCase::b;
    r.m = std::make_pair(m[0].front(), m[1].front());
    return r;
  }

  // Not vertex-transitive: the limit is bipartite; follow which cells of R
  // occur on which global side. A copy attached with its orbit point on the
  // opposite lobe side has its sides flipped; that is harmless only when
  // lambda0 has an automorphism exchanging its sides.
  bool swap_exists = false;
  for (const Permutation& p : aut.generators) swap_exists = swap_exists || side[p(0)] != side[0];
  std::vector<std::array<char, 2>> reached(kk, {0, 0});
  std::vector<std::pair<int, int>> stack;
  auto visit = [&](int k, int g) {
    if (!reached[k][g]) {
      reached[k][g] = 1;
      stack.emplace_back(k, g);
    }
  };
  for (int x = 0; x < n; ++x) visit(spec.r_of[x], side[x]);
  while (!stack.empty()) {
    const auto [k, g] = stack.back();
    stack.pop_back();
    for (int l = 0; l < spec.orbit_count(); ++l) {
      if (spec.mu[k][l] == 0) continue;
      const int flip = g ^ side[spec.q[l].front()];
      if (flip && !swap_exists) {
        r.edge_reason = "no side-preserving reference maps: a vertex lies on different sides of its lobes";
        return r;
      }
      for (int y = 0; y < n; ++y) visit(spec.r_of[y], flip ^ side[y]);
    }
  }
  std::array<long long, 2> m{-1, -1};
  for (int k = 0; k < kk; ++k) {
    for (int g = 0; g < 2; ++g) {
      if (!reached[k][g]) continue;
      if (m[g] < 0) m[g] = r.lobe_counts[k];
      if (m[g] != r.lobe_counts[k]) {
        r.edge_reason = "lobe counts differ on one side of the bipartition";
        return r;
      }
    }
  }
  if (std::max(m[0], m[1]) < 2) {
    r.edge_reason = "both side counts are below 2";
    return r;
  }
  r.edge_transitive = true;
  r.edge_case = EdgeCase::c;
  r.m = std::make_pair(m[0], m[1]);
  return r;
}

bool spec_equivalent(const BuildSpec& a, const BuildSpec& b, int compare_depth, const BuildOptions& options) {
  const BuildResult ra = build_truncation(with_depth(a, compare_depth), options);
  const BuildResult rb = build_truncation(with_depth(b, compare_depth), options);
  const Graph& ga = ra.graph;
  const Graph& gb = rb.graph;
  if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return false;
  std::vector<int> da(ga.vertex_count());
  std::vector<int> db(gb.vertex_count());
  for (int v = 0; v < ga.vertex_count(); ++v) da[v] = ga.degree(v);
  for (int v = 0; v < gb.vertex_count(); ++v) db[v] = gb.degree(v);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return block_tree_isomorphic(ga, gb);
}

LocalTransitivity verify_local_transitivity(const BuildResult& result, const BuildSpec& spec, int radius) {
  check_pair(result, spec);
  if (radius < 0 || radius > result.depth - 1) {
    throw PreconditionError("radius " + std::to_string(radius) + " needs a truncation of depth at least " +
                            std::to_string(radius + 1) + " (have " + std::to_string(result.depth) + ")");
  }
  const LobeSystem system = lobe_system(result, spec);
  RootedCodes codes(system);
  LocalTransitivity out;
  int first = -1;
  int first_code = -1;
  for (int l = 0; l < result.lobe_count(); ++l) {
    if (result.lobe_depth[l] > result.depth - radius) continue;
    ++out.checked_lobes;
    const int code = codes.ball_code(l, radius);
    if (first < 0) {
      first = l;
      first_code = code;
    } else if (code != first_code) {
      out.holds = false;
      out.witness = std::make_pair(first, l);
      return out;
    }
  }
  return out;
}

}  // namespace lobekit
