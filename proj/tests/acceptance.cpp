// Acceptance gate: prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lobekit/builder.hpp"
#include "lobekit/catalog.hpp"
#include "lobekit/decomposition.hpp"
#include "lobekit/json_io.hpp"
#include "lobekit/symmetry.hpp"
#include "lobekit/transitivity.hpp"
#include "support/oracles.hpp"

using namespace lobekit;
using lobekit::testing::fixture_path;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Verdict pairs (theorem, oracle) for one connectivity-1 graph.
struct Verdicts {
  bool vertex_thm, vertex_orc;
  bool lobe_thm, lobe_orc;
  bool edge_thm, edge_orc;
  bool arc_thm, arc_orc;
};

Verdicts verdicts(const ClassificationReport& r) {
  return {r.vertex->holds, r.direct.vertex_orbits == 1, r.lobe->holds, r.direct.lobe_orbits == 1,
          r.edge->holds,   r.direct.edge_orbits == 1,   r.arc->holds,  r.direct.arc_orbits == 1};
}

std::vector<Graph>& corpus() {
  static std::vector<Graph> graphs = [] {
    std::vector<Graph> all;
    for (int n = 2; n <= 7; ++n) {
      for (Graph& g : lobekit::testing::connected_graphs(n)) all.push_back(std::move(g));
    }
    return all;
  }();
  return graphs;
}

bool is_connectivity_one(const Graph& g) { return connectivity_class(g) == ConnectivityClass::connectivity_one; }

Outcome oracle_equivalence() {
  const std::vector<int> expected_counts = {1, 2, 6, 21, 112, 853};
  std::vector<int> counts(6, 0);
  for (const Graph& g : corpus()) ++counts[g.vertex_count() - 2];
  if (counts != expected_counts) return {false, "enumerator produced the wrong number of connected graphs"};

  int checked = 0, mismatches = 0;
  std::string first;
  for (const Graph& g : corpus()) {
    if (!is_connectivity_one(g)) continue;
    ++checked;
    const auto r = classify(g);
    const Verdicts v = verdicts(r);
    const bool ok = v.vertex_thm == v.vertex_orc && v.lobe_thm == v.lobe_orc && v.edge_thm == v.edge_orc &&
                    v.arc_thm == v.arc_orc;
    if (!ok) {
      ++mismatches;
      if (first.empty()) first = "; first mismatch on a " + std::to_string(g.vertex_count()) + "-vertex graph";
    }
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " connectivity-1 graphs on 2..7 vertices, " + std::to_string(mismatches) +
              " discrepancies" + first};
}

bool lobes_satisfy(const Graph& g, bool edge) {
  const LobeDecomposition d = decompose(g);
  for (const Lobe& lobe : d.lobes) {
    const auto c = classify_direct(lobe_subgraph(g, lobe));
    if ((edge ? c.edge_orbits : c.arc_orbits) != 1) return false;
  }
  return true;
}

Outcome implication_chain() {
  std::vector<Graph> graphs;
  for (const Graph& g : corpus()) {
    if (is_connectivity_one(g)) graphs.push_back(g);
  }
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) graphs.push_back(lobekit::testing::random_connectivity_one(rng, 30));
  int failures = 0, edge_positive = 0, arc_positive = 0;
  for (const Graph& g : graphs) {
    const auto r = classify(g);
    const Verdicts v = verdicts(r);
    bool ok = (!v.arc_thm || v.edge_thm) && (!v.edge_thm || v.lobe_thm) && (!v.arc_orc || v.edge_orc) &&
              (!v.edge_orc || v.lobe_orc);
    if (v.edge_orc) {
      ++edge_positive;
      ok = ok && lobes_satisfy(g, true);
    }
    if (v.arc_orc) {
      ++arc_positive;
      ok = ok && lobes_satisfy(g, false);
    }
    failures += !ok;
  }
  return {failures == 0, std::to_string(graphs.size()) + " graphs (" + std::to_string(edge_positive) +
                             " edge-transitive, " + std::to_string(arc_positive) + " arc-transitive), " +
                             std::to_string(failures) + " violations"};
}

Outcome chorded_5_cycle() {
  const BuildSpec spec = load_build_spec(fixture_path("chorded_5_cycle.json"));
  const Graph reference = lobekit::testing::chorded_5_cycle_by_hand();
  const BuildResult one = build_truncation(with_depth(spec, 1));
  const bool iso = find_isomorphism(one.graph, reference).has_value();
  const BuildResult three = build_truncation(with_depth(spec, 3));
  const InteriorReport interior = verify_interior(three, spec);
  std::ostringstream detail;
  detail << "depth 1: " << one.graph.vertex_count() << " vertices, " << one.lobe_count()
         << " lobes, isomorphic to hand expansion: " << (iso ? "yes" : "no") << "; depth 3 interior "
         << (interior.ok ? "ok" : "violated") << " (" << interior.interior_vertices << " interior vertices)";
  return {iso && interior.ok, detail.str()};
}

Outcome clothesline() {
  std::vector<BuildSpec> specs;
  for (const char* name : {"clothesline_i.json", "clothesline_ii.json", "clothesline_iii.json", "clothesline_iv.json"}) {
    specs.push_back(load_build_spec(fixture_path(name)));
  }
  bool all_equivalent = true;
  for (size_t a = 0; a < specs.size(); ++a) {
    for (size_t b = a + 1; b < specs.size(); ++b) all_equivalent = all_equivalent && spec_equivalent(specs[a], specs[b], 3);
  }
  const BuildResult t = build_truncation(with_depth(specs[3], 4));
  const LobeDecomposition d = decompose(t.graph);
  int central = -1;
  std::vector<int> sorted_sigma = t.lobe_sigma[0];
  std::sort(sorted_sigma.begin(), sorted_sigma.end());
  for (int l = 0; l < d.lobe_count(); ++l) {
    if (d.lobes[l].vertices == sorted_sigma) central = l;
  }
  const GeneratorSet aut = automorphism_generators(t.graph);
  const GeneratorSet action = restrict_to_lobe(lobe_stabilizer(t.graph, aut, d, central), d, central);
  const BigInt order = group_order(action);
  const Graph k4 = lobe_subgraph(t.graph, d.lobes[central]);
  const OrbitPartition orbits = orbit_partition(action, OrbitDomain::vertices, k4);
  // Local ids follow the sorted vertex order; translate back to v1..v4.
  std::vector<std::vector<int>> named;
  for (const auto& cell : orbits.cells) {
    std::vector<int> vs;
    for (int i : cell) {
      const int host = d.lobes[central].vertices[i];
      vs.push_back(static_cast<int>(std::find(t.lobe_sigma[0].begin(), t.lobe_sigma[0].end(), host) -
                                    t.lobe_sigma[0].begin()) + 1);
    }
    std::sort(vs.begin(), vs.end());
    named.push_back(vs);
  }
  std::sort(named.begin(), named.end());
  const bool orbits_ok = named == std::vector<std::vector<int>>{{1, 2}, {3, 4}};
  std::ostringstream detail;
  detail << "(i)-(iv) pairwise equivalent at depth 3: " << (all_equivalent ? "yes" : "no")
         << "; central lobe action order " << order.str() << ", orbits";
  for (const auto& cell : named) {
    detail << " {";
    for (size_t i = 0; i < cell.size(); ++i) detail << (i ? "," : "") << "v" << cell[i];
    detail << "}";
  }
  return {all_equivalent && order == 4 && orbits_ok, detail.str()};
}

Outcome folkman() {
  const Graph g = named_graph("folkman");
  bool regular = true;
  for (int v = 0; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == 4;
  const auto c = classify_direct(g);
  std::ostringstream detail;
  detail << g.vertex_count() << " vertices, " << (regular ? "4-regular" : "not 4-regular") << ", vertex orbits "
         << c.vertex_orbits << ", edge orbits " << c.edge_orbits;
  return {g.vertex_count() == 20 && regular && c.edge_orbits == 1 && c.vertex_orbits == 2, detail.str()};
}

Outcome petersen() {
  const Graph g = named_graph("petersen");
  std::vector<long long> arcs;
  for (int k = 1; k <= 3; ++k) arcs.push_back(k_arc_orbit_count(g, k));
  const LimitReport m12 = classify_limit(load_build_spec(fixture_path("petersen_m12.json")));
  const LimitReport m22 = classify_limit(load_build_spec(fixture_path("petersen_m22.json")));
  const bool arcs_ok = arcs == std::vector<long long>{1, 1, 1};
  const bool m12_ok = m12.lobe_transitive && !m12.vertex_transitive && !m12.edge_transitive;
  const bool m22_ok = m22.vertex_transitive && m22.edge_transitive;
  std::ostringstream detail;
  detail << "k-arc orbits for k=1,2,3: " << arcs[0] << "," << arcs[1] << "," << arcs[2] << "; m=(1,2): lobe "
         << m12.lobe_transitive << " vertex " << m12.vertex_transitive << " edge " << m12.edge_transitive
         << "; m=(2,2): vertex " << m22.vertex_transitive << " edge " << m22.edge_transitive;
  return {arcs_ok && m12_ok && m22_ok, detail.str()};
}

Outcome tree_valences() {
  std::vector<Graph> all;
  for (int n = 2; n <= 10; ++n) {
    for (Graph& t : lobekit::testing::trees(n)) all.push_back(std::move(t));
  }
  const size_t exhaustive = all.size();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    all.push_back(lobekit::testing::random_tree(rng, std::uniform_int_distribution<int>(2, 40)(rng)));
  }
  int failures = 0, positive = 0;
  for (const Graph& t : all) {
    const auto pair = tree_edge_transitivity(t);
    const auto c = classify_direct(t);
    positive += pair.has_value();
    if (pair.has_value() != (c.edge_orbits == 1)) ++failures;
    if (pair && (pair->first == pair->second) != (c.arc_orbits == 1)) ++failures;
  }
  return {failures == 0 && exhaustive == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106,
          std::to_string(exhaustive) + " trees on 2..10 vertices + 100 random, " + std::to_string(positive) +
              " edge-transitive, " + std::to_string(failures) + " mismatches"};
}

Outcome complete_bipartite_cases() {
  const auto a = classify_limit(load_build_spec(fixture_path("k33_two_lobes.json")));
  const auto b = classify_limit(load_build_spec(fixture_path("k23_one_image_each.json")));
  const auto c = classify_limit(load_build_spec(fixture_path("k23_two_images.json")));
  std::ostringstream detail;
  detail << "s=t: " << to_string(a.edge_case) << ", one image each: " << to_string(b.edge_case)
         << ", two images: " << to_string(c.edge_case);
  return {a.edge_transitive && a.edge_case == EdgeCase::a && b.edge_transitive && b.edge_case == EdgeCase::b &&
              c.edge_transitive && c.edge_case == EdgeCase::c,
          detail.str()};
}

Outcome holt() {
  const auto c = classify_direct(named_graph("holt"));
  const auto limit = classify_limit(load_build_spec(fixture_path("holt_two_lobes.json")));
  std::ostringstream detail;
  detail << "orbits: vertices " << c.vertex_orbits << ", edges " << c.edge_orbits << ", arcs " << c.arc_orbits
         << "; limit: vertex " << limit.vertex_transitive << " edge " << limit.edge_transitive << " arc "
         << limit.arc_transitive;
  return {c.vertex_orbits == 1 && c.edge_orbits == 1 && c.arc_orbits == 2 && limit.vertex_transitive &&
              limit.edge_transitive && !limit.arc_transitive,
          detail.str()};
}

bool monotone(const BuildResult& small, const BuildResult& large) {
  const int n = small.graph.vertex_count();
  if (large.graph.vertex_count() < n || large.lobe_count() < small.lobe_count()) return false;
  std::vector<int> prefix(n);
  for (int v = 0; v < n; ++v) prefix[v] = v;
  if (!(induced_subgraph(large.graph, prefix) == small.graph)) return false;
  for (int l = 0; l < small.lobe_count(); ++l) {
    if (large.lobe_sigma[l] != small.lobe_sigma[l]) return false;
  }
  return true;
}

Outcome builder_soundness() {
  const std::vector<std::string> names = {
      "chorded_5_cycle.json",   "clothesline_i.json",   "clothesline_ii.json", "clothesline_iii.json",
      "clothesline_iv.json",    "k4_two_lobes.json",    "petersen_m12.json",   "petersen_m22.json",
      "k33_two_lobes.json",     "k23_one_image_each.json", "k23_two_images.json", "holt_two_lobes.json"};
  int failures = 0;
  std::string failed;
  long long largest = 0;
  for (const auto& name : names) {
    const BuildSpec spec = load_build_spec(fixture_path(name));
    const BuildResult three = build_truncation(with_depth(spec, 3));
    const BuildResult four = build_truncation(with_depth(spec, 4));
    largest = std::max<long long>(largest, four.graph.vertex_count());
    const bool ok = verify_interior(four, spec).ok && lobes_match_lambda0(four, spec) && monotone(three, four) &&
                    verify_local_transitivity(four, spec, 2).holds;
    if (!ok) {
      ++failures;
      failed += " " + name;
    }
  }
  return {failures == 0, std::to_string(names.size()) + " fixture specs at depth 4 (largest truncation " +
                             std::to_string(largest) + " vertices), " + std::to_string(failures) + " failing" + failed};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"theorem verdicts match orbit counts on all small connectivity-1 graphs", oracle_equivalence},
      {"arc => edge => lobe transitivity, and lobes inherit edge/arc transitivity", implication_chain},
      {"chorded 5-cycle spec: depth-1 truncation and interior check", chorded_5_cycle},
      {"clothesline specs agree and the central lobe's induced action", clothesline},
      {"Folkman graph is semisymmetric on 20 vertices", folkman},
      {"Petersen k-arcs and Petersen-lobe limits", petersen},
      {"tree edge/arc transitivity by valences", tree_valences},
      {"complete bipartite lobes give edge cases 3a, 3b, 3c", complete_bipartite_cases},
      {"Holt graph and its limit are half-arc-transitive", holt},
      {"builder soundness on every fixture spec", builder_soundness},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("[%s] %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
