#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "lobekit/builder.hpp"
#include "lobekit/catalog.hpp"
#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"
#include "lobekit/json_io.hpp"
#include "lobekit/symmetry.hpp"
#include "support/oracles.hpp"

using namespace lobekit;
namespace lt = lobekit::testing;

namespace {

BuildSpec fixture(const std::string& name) { return load_build_spec(lt::fixture_path(name)); }

RawBuildSpec k4_raw() {
  RawBuildSpec raw;
  raw.n = 4;
  raw.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  raw.r_partition = {{0, 1, 2, 3}};
  raw.mu = {{1, {{1, 2}}}};
  raw.depth = 2;
  return raw;
}

// Certificate of the graph-distance ball around `roots`, roots coloured
// by their position in the list.
std::string rooted_ball(const Graph& g, const std::vector<int>& roots, int radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue;
  for (int r : roots) {
    if (dist[r] < 0) {
      dist[r] = 0;
      queue.push_back(r);
    }
  }
  std::vector<int> ball;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ball.push_back(v);
    if (dist[v] == radius) continue;
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(ball.begin(), ball.end());
  std::vector<int> colours(ball.size(), 0);
  for (size_t i = 0; i < roots.size(); ++i) {
    const auto at = std::lower_bound(ball.begin(), ball.end(), roots[i]) - ball.begin();
    colours[at] = static_cast<int>(i) + 1;
  }
  return canonical_certificate(induced_subgraph(g, ball), colours).bytes;
}

struct LocalSymmetry {
  bool vertices_alike, edges_alike, arcs_alike;
};

// Compares rooted balls around the central lobe's vertices, edges and arcs.
// Every vertex and edge of the limit graph is an image of one of these.
LocalSymmetry local_symmetry(const BuildSpec& spec, int depth, int radius) {
  const BuildResult t = build_truncation(with_depth(spec, depth));
  const auto& sigma = t.lobe_sigma[0];
  std::set<std::string> vertices, edges, arcs;
  for (int v : sigma) vertices.insert(rooted_ball(t.graph, {v}, radius));
  for (const Edge& e : spec.lambda0.edges()) {
    const int u = sigma[e.u], v = sigma[e.v];
    const std::string forward = rooted_ball(t.graph, {u, v}, radius);
    const std::string backward = rooted_ball(t.graph, {v, u}, radius);
    arcs.insert(forward);
    arcs.insert(backward);
    edges.insert(std::min(forward, backward));
  }
  // An edge orbit contains both orientations only up to reversal; compare
  // edges by the unordered pair of their arc certificates.
  std::set<std::pair<std::string, std::string>> edge_pairs;
  for (const Edge& e : spec.lambda0.edges()) {
    const int u = sigma[e.u], v = sigma[e.v];
    auto a = rooted_ball(t.graph, {u, v}, radius), b = rooted_ball(t.graph, {v, u}, radius);
    edge_pairs.insert(std::minmax(a, b));
  }
  return {vertices.size() == 1, edge_pairs.size() == 1, arcs.size() == 1};
}

}  // namespace

TEST_CASE("validate_spec accepts the fixtures and derives orbits") {
  const BuildSpec c = fixture("chorded_5_cycle.json");
  CHECK(c.q == std::vector<std::vector<int>>{{0, 2}, {1}, {3, 4}});
  CHECK(c.h_is_full);
  CHECK(c.cell_count() == 2);
  CHECK(c.mu[0] == std::vector<long long>{3, 0, 1});
  CHECK(c.mu[1] == std::vector<long long>{0, 2, 0});
  CHECK(c.lobe_count(0) == 4);
  CHECK(c.lobe_count(1) == 2);
  const BuildSpec i = fixture("clothesline_i.json");
  CHECK_FALSE(i.h_is_full);
  CHECK(i.orbit_count() == 4);
  const BuildSpec iv = fixture("clothesline_iv.json");
  CHECK(iv.q == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("validate_spec rejects each broken condition") {
  auto rejects = [](RawBuildSpec raw) { CHECK_THROWS_AS(validate_spec(raw), InputError); };
  CHECK_NOTHROW(validate_spec(k4_raw()));
  {
    auto raw = k4_raw();  // not biconnected
    raw.n = 5;
    raw.edges.push_back({3, 4});
    raw.r_partition = {{0, 1, 2, 3, 4}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // not an automorphism... K4 has all of them; use a path instead
    raw.n = 4;
    raw.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    raw.h = std::vector<std::vector<int>>{{1, 0, 2, 3}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // generator of the wrong degree
    raw.h = std::vector<std::vector<int>>{{1, 0, 2}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // not a permutation
    raw.h = std::vector<std::vector<int>>{{1, 1, 2, 3}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // R misses a vertex
    raw.r_partition = {{0, 1, 2}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // R overlaps
    raw.r_partition = {{0, 1, 2, 3}, {3}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // Q does not refine R
    raw.h = std::vector<std::vector<int>>{{1, 0, 2, 3}};
    raw.r_partition = {{0, 2, 3}, {1}};
    raw.mu = {{1, {{1, 2}, {2, 1}, {3, 1}}}, {2, {{1, 2}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // orbit index out of range
    raw.mu = {{1, {{2, 2}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // cell index out of range
    raw.mu = {{2, {{1, 2}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // duplicate entry
    raw.mu = {{1, {{1, 2}, {1, 2}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // negative value
    raw.mu = {{1, {{1, -1}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // zero where Q_j lies in R_k
    raw.mu = {{1, {{1, 0}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // every vertex in a single lobe
    raw.mu = {{1, {{1, 1}}}};
    rejects(raw);
  }
  {
    auto raw = k4_raw();
    raw.depth = -1;
    rejects(raw);
  }
  {
    auto raw = k4_raw();  // positive where Q_j is outside R_k
    raw.h = std::vector<std::vector<int>>{{1, 0, 2, 3}};
    raw.r_partition = {{0, 1}, {2}, {3}};
    raw.mu = {{1, {{1, 2}, {2, 1}}}, {2, {{2, 1}}}, {3, {{3, 1}}}};
    rejects(raw);
  }
}

TEST_CASE("K2 is a valid lobe and builds a regular tree") {
  RawBuildSpec raw;
  raw.n = 2;
  raw.edges = {{0, 1}};
  raw.r_partition = {{0, 1}};
  raw.mu = {{1, {{1, 3}}}};
  raw.depth = 3;
  const BuildSpec spec = validate_spec(raw);
  const BuildResult t = build_truncation(spec);
  CHECK(t.graph.edge_count() == t.graph.vertex_count() - 1);
  CHECK(is_connected(t.graph));
  CHECK(verify_interior(t, spec).ok);
  const LimitReport r = classify_limit(spec);
  CHECK(r.arc_transitive);
}

TEST_CASE("truncation sizes follow the attachment counts") {
  // K4 lobes, two per vertex: every frontier vertex gets one new lobe with
  // three new vertices, so |V| = 4 (3^(d+1) - 1) / 2.
  const BuildSpec spec = fixture("k4_two_lobes.json");
  long long power = 3;
  for (int d = 0; d <= 5; ++d) {
    const BuildResult t = build_truncation(with_depth(spec, d));
    CHECK(t.graph.vertex_count() == 4 * (power - 1) / 2);
    CHECK(t.graph.edge_count() == 6 * t.lobe_count());
    CHECK(t.depth == d);
    power *= 3;
  }
}

TEST_CASE("depth 0 is lambda0 itself") {
  const BuildSpec spec = fixture("petersen_m12.json");
  const BuildResult t = build_truncation(with_depth(spec, 0));
  CHECK(t.graph == spec.lambda0);
  CHECK(t.lobe_count() == 1);
}

TEST_CASE("the vertex cap raises a resource error") {
  BuildOptions options;
  options.max_vertices = 1000;
  CHECK_THROWS_AS(build_truncation(with_depth(fixture("holt_two_lobes.json"), 3), options), ResourceError);
}

TEST_CASE("attachment choices do not change the truncation") {
  for (const char* name : {"chorded_5_cycle.json", "clothesline_ii.json", "petersen_m12.json", "k23_two_images.json"}) {
    CAPTURE(name);
    const BuildSpec spec = with_depth(fixture(name), 3);
    const BuildResult plain = build_truncation(spec);
    BuildOptions options;
    options.attach_seed = 99;
    const BuildResult shuffled = build_truncation(spec, options);
    CHECK(canonical_certificate(plain.graph) == canonical_certificate(shuffled.graph));
  }
}

TEST_CASE("registry and interior checks") {
  const BuildSpec spec = fixture("chorded_5_cycle.json");
  const BuildResult t = build_truncation(with_depth(spec, 3));
  CHECK(lobes_match_lambda0(t, spec));
  const InteriorReport report = verify_interior(t, spec);
  CHECK(report.ok);
  CHECK(report.interior_vertices + report.frontier_vertices == t.graph.vertex_count());
  CHECK(lobe_system(t, spec).lobe_count() == t.lobe_count());

  BuildResult broken = t;
  std::swap(broken.lobe_sigma[3][0], broken.lobe_sigma[3][1]);
  CHECK_FALSE(lobes_match_lambda0(broken, spec));

  // Drop the last lobe: its attachment vertex now has too few lobes.
  BuildResult missing = build_truncation(with_depth(spec, 2));
  const auto last = missing.lobe_sigma.back();
  std::vector<int> keep;
  for (int v = 0; v < missing.graph.vertex_count(); ++v) {
    if (std::count(last.begin(), last.end(), v) == 0 || missing.vertex_depth[v] < 2) keep.push_back(v);
  }
  CHECK(keep.size() + 4 == static_cast<size_t>(missing.graph.vertex_count()));
  missing.graph = induced_subgraph(missing.graph, keep);
  missing.lobe_sigma.pop_back();
  missing.lobe_depth.pop_back();
  missing.vertex_depth.resize(keep.size());
  const InteriorReport bad = verify_interior(missing, spec);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("local transitivity agrees with the ball oracle") {
  for (const char* name : {"chorded_5_cycle.json", "clothesline_iii.json", "k23_two_images.json"}) {
    CAPTURE(name);
    const BuildSpec spec = fixture(name);
    const BuildResult t = build_truncation(with_depth(spec, 3));
    const LocalTransitivity local = verify_local_transitivity(t, spec, 1);
    CHECK(local.holds);
    CHECK(local.checked_lobes > 1);
    const LobeDecomposition d = decompose(t.graph);
    // Lobes created at stage <= 2 all have isomorphic radius-1 balls.
    std::vector<int> lobes;
    for (int l = 0; l < d.lobe_count(); ++l) {
      bool inner = true;
      for (int v : d.lobes[l].vertices) inner = inner && t.vertex_depth[v] <= 2;
      if (inner) lobes.push_back(l);
    }
    for (size_t i = 1; i < lobes.size(); i += 7) CHECK(lt::lobe_balls_isomorphic(t.graph, d, lobes[0], lobes[i], 1));
  }
  const BuildResult t = build_truncation(with_depth(fixture("k4_two_lobes.json"), 3));
  CHECK_THROWS_AS(verify_local_transitivity(t, fixture("k4_two_lobes.json"), 3), PreconditionError);
}

TEST_CASE("local transitivity finds differing balls") {
  // A chain of four triangles dressed up as a build result: the end lobes
  // have different radius-1 balls from the inner ones.
  RawBuildSpec raw;
  raw.n = 3;
  raw.edges = {{0, 1}, {0, 2}, {1, 2}};
  raw.r_partition = {{0, 1, 2}};
  raw.mu = {{1, {{1, 2}}}};
  raw.depth = 2;
  const BuildSpec spec = validate_spec(raw);
  BuildResult fake;
  fake.graph = make_graph(9, std::vector<std::pair<int, int>>{
                                 {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                                 {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}});
  fake.lobe_sigma = {{2, 3, 4}, {0, 1, 2}, {4, 5, 6}, {6, 7, 8}};
  fake.lobe_depth = {0, 1, 1, 2};
  fake.vertex_depth = {1, 1, 0, 0, 0, 1, 1, 2, 2};
  fake.depth = 2;
  const LocalTransitivity local = verify_local_transitivity(fake, spec, 1);
  CHECK_FALSE(local.holds);
  REQUIRE(local.witness.has_value());
  const LobeDecomposition d = decompose(fake.graph);
  CHECK_FALSE(lt::lobe_balls_isomorphic(fake.graph, d, 0, 1, 1));
}

TEST_CASE("truncations grow monotonically") {
  const BuildSpec spec = fixture("clothesline_i.json");
  const BuildResult small = build_truncation(with_depth(spec, 2));
  const BuildResult large = build_truncation(with_depth(spec, 3));
  std::vector<int> prefix(small.graph.vertex_count());
  for (size_t v = 0; v < prefix.size(); ++v) prefix[v] = static_cast<int>(v);
  CHECK(induced_subgraph(large.graph, prefix) == small.graph);
  for (int l = 0; l < small.lobe_count(); ++l) CHECK(large.lobe_sigma[l] == small.lobe_sigma[l]);
}

TEST_CASE("limit verdicts on the worked examples") {
  const LimitReport delta = classify_limit(fixture("k4_two_lobes.json"));
  CHECK(delta.lobe_transitive);
  CHECK(delta.vertex_transitive);
  CHECK(delta.arc_transitive);
  CHECK(delta.lobe_counts == std::vector<long long>{2});

  for (const char* name : {"clothesline_i.json", "clothesline_ii.json", "clothesline_iii.json", "clothesline_iv.json"}) {
    const LimitReport r = classify_limit(fixture(name));
    CHECK(r.lobe_transitive);
    CHECK_FALSE(r.vertex_transitive);
    CHECK_FALSE(r.edge_transitive);
  }

  const LimitReport b = classify_limit(fixture("k23_one_image_each.json"));
  CHECK(b.edge_case == EdgeCase::b);
  CHECK(b.m == std::make_pair(1LL, 1LL));
  const LimitReport c = classify_limit(fixture("k23_two_images.json"));
  CHECK(c.edge_case == EdgeCase::c);
  CHECK_FALSE(c.vertex_transitive);
}

TEST_CASE("limit verdicts agree with rooted balls in deep truncations") {
  for (const char* name : {"chorded_5_cycle.json", "clothesline_i.json", "clothesline_iv.json", "k4_two_lobes.json",
                           "petersen_m12.json", "petersen_m22.json", "k33_two_lobes.json", "k23_one_image_each.json",
                           "k23_two_images.json"}) {
    CAPTURE(name);
    const BuildSpec spec = fixture(name);
    const LimitReport r = classify_limit(spec);
    const LocalSymmetry s = local_symmetry(spec, 4, 3);
    CHECK(r.vertex_transitive == s.vertices_alike);
    CHECK(r.edge_transitive == s.edges_alike);
    CHECK(r.arc_transitive == s.arcs_alike);
  }
}

TEST_CASE("spec equivalence") {
  CHECK(spec_equivalent(fixture("clothesline_i.json"), fixture("clothesline_iv.json"), 3));
  CHECK_FALSE(spec_equivalent(fixture("clothesline_i.json"), fixture("k4_two_lobes.json"), 3));
  CHECK_FALSE(spec_equivalent(fixture("petersen_m12.json"), fixture("petersen_m22.json"), 2));
  // H = Aut(Petersen) with two lobes per vertex gives the same graph as the
  // dihedral subgroup with m1 = m2 = 2.
  RawBuildSpec raw;
  const BuildSpec m22 = fixture("petersen_m22.json");
  raw.n = 10;
  for (const Edge& e : m22.lambda0.edges()) raw.edges.emplace_back(e.u, e.v);
  raw.r_partition = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  raw.mu = {{1, {{1, 2}}}};
  raw.depth = 3;
  CHECK(spec_equivalent(validate_spec(raw), m22, 3));
}
