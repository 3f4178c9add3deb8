#include "lobekit/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lobekit/builder.hpp"
#include "lobekit/catalog.hpp"
#include "lobekit/decomposition.hpp"
#include "lobekit/error.hpp"
#include "lobekit/graph_io.hpp"
#include "lobekit/json_io.hpp"
#include "lobekit/symmetry.hpp"
#include "lobekit/transitivity.hpp"

namespace lobekit {

using nlohmann::json;

namespace {

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string list(const std::vector<int>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

std::string lists(const std::vector<std::vector<int>>& cells) {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) s += " ";
    s += list(cells[i]);
  }
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool json = false;
  long long max_vertices = 100'000;
};

int cmd_decompose(const Options& o, const std::string& path, std::ostream& out) {
  const Graph g = load_graph(path);
  const LobeDecomposition d = decompose(g);
  if (o.json) {
    out << decomposition_json(d).dump(2) << "\n";
    return kExitOk;
  }
  out << "vertices " << d.vertex_count << "\n";
  out << "lobes " << d.lobe_count() << "\n";
  out << "cut vertices " << list(d.cut_vertices) << "\n";
  out << "classes " << d.classes.class_count() << "\n";
  for (int l = 0; l < d.lobe_count(); ++l) {
    out << "lobe " << l << " class " << d.classes.class_of[l] << " vertices " << list(d.lobes[l].vertices)
        << " edges " << d.lobes[l].edges.size() << "\n";
  }
  return kExitOk;
}

int cmd_aut(const Options& o, const std::string& path, std::ostream& out) {
  const Graph g = load_graph(path);
  const GeneratorSet gens = automorphism_generators(g);
  const auto vertices = orbit_partition(gens, OrbitDomain::vertices, g);
  const auto edges = orbit_partition(gens, OrbitDomain::edges, g);
  const auto arcs = orbit_partition(gens, OrbitDomain::arcs, g);
  const BigInt order = group_order(gens, std::max(kDefaultMaxGroupDegree, g.vertex_count()));
  if (o.json) {
    json doc = {{"group_order", order.str()},
                {"generators", generators_json(gens)},
                {"vertex_orbits", orbits_json(vertices)},
                {"edge_orbits", orbits_json(edges)},
                {"arc_orbit_count", arcs.cell_count()}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "group order " << order.str() << "\n";
  out << "generators " << gens.generators.size() << "\n";
  for (const Permutation& p : gens.generators) out << "  " << p.cycles() << "\n";
  out << "vertex orbits " << vertices.cell_count() << ": " << lists(vertices.cells) << "\n";
  out << "edge orbits " << edges.cell_count() << "\n";
  out << "arc orbits " << arcs.cell_count() << "\n";
  return kExitOk;
}

int cmd_classify(const Options& o, const std::string& path, std::ostream& out) {
  const ClassificationReport r = classify(load_graph(path));
  if (o.json) {
    out << classification_json(r).dump(2) << "\n";
    return kExitOk;
  }
  out << "connectivity " << to_string(r.connectivity) << "\n";
  out << "lobes " << r.lobe_count << "\n";
  out << "group order " << r.direct.group_order.str() << "\n";
  out << "orbits: vertices " << r.direct.vertex_orbits << ", edges " << r.direct.edge_orbits << ", arcs "
      << r.direct.arc_orbits;
  if (r.direct.lobe_orbits) out << ", lobes " << *r.direct.lobe_orbits;
  out << "\n";
  if (r.vertex) {
    out << "vertex-transitive " << yes_no(r.vertex->holds) << "\n";
    out << "lobe-transitive " << yes_no(r.lobe->holds);
    if (!r.lobe->holds) out << " (" << to_string(r.lobe->failure) << ")";
    out << "\n";
    out << "edge-transitive " << yes_no(r.edge->holds);
    if (r.edge->holds) {
      out << " (case " << to_string(r.edge->edge_case);
      if (r.edge->m) out << ", m = " << r.edge->m->first << "," << r.edge->m->second;
      out << ")";
    } else if (!r.edge->reason.empty()) {
      out << " (" << r.edge->reason << ")";
    }
    out << "\n";
    out << "arc-transitive " << yes_no(r.arc->holds) << "\n";
  } else {
    out << "vertex-transitive " << yes_no(r.direct.vertex_orbits == 1) << "\n";
    out << "edge-transitive " << yes_no(r.direct.edge_orbits == 1) << "\n";
    out << "arc-transitive " << yes_no(r.direct.arc_orbits == 1) << "\n";
  }
  if (r.is_tree) {
    out << "tree valences ";
    if (r.tree) {
      out << r.tree->first << "," << r.tree->second << "\n";
    } else {
      out << "mixed\n";
    }
  }
  out << "consistent " << yes_no(r.consistent) << "\n";
  return kExitOk;
}

int cmd_karc(const Options& o, const std::string& path, int k, std::ostream& out) {
  const long long count = k_arc_orbit_count(load_graph(path), k);
  if (o.json) {
    out << json{{"k", k}, {"orbit_count", count}}.dump(2) << "\n";
  } else {
    out << count << "\n";
  }
  return kExitOk;
}

int cmd_build(const Options& o, const std::string& path, const std::string& output, int depth, std::ostream& out) {
  BuildSpec spec = load_build_spec(path);
  if (depth >= 0) spec = with_depth(std::move(spec), depth);
  BuildOptions options;
  options.max_vertices = o.max_vertices;
  const BuildResult result = build_truncation(spec, options);
  if (!output.empty()) {
    write_text_file(output, serialize_graph(result.graph));
    write_text_file(output + ".json", build_sidecar_json(result, spec).dump(2) + "\n");
    if (o.json) {
      out << json{{"graph", output}, {"sidecar", output + ".json"}, {"vertex_count", result.graph.vertex_count()},
                  {"edge_count", result.graph.edge_count()}, {"lobe_count", result.lobe_count()}}
                 .dump(2)
          << "\n";
    } else {
      out << "wrote " << output << " (" << result.graph.vertex_count() << " vertices, " << result.graph.edge_count()
          << " edges, " << result.lobe_count() << " lobes)\n";
    }
    return kExitOk;
  }
  if (o.json) {
    json doc = build_sidecar_json(result, spec);
    doc["graph"] = serialize_graph(result.graph);
    out << doc.dump(2) << "\n";
  } else {
    out << serialize_graph(result.graph);
  }
  return kExitOk;
}

int cmd_limit(const Options& o, const std::string& path, std::ostream& out) {
  const BuildSpec spec = load_build_spec(path);
  const LimitReport r = classify_limit(spec);
  if (o.json) {
    out << limit_json(r, spec).dump(2) << "\n";
    return kExitOk;
  }
  out << "lambda0 orbits " << lists(r.lambda0_orbits) << "\n";
  out << "lobes per vertex";
  for (long long c : r.lobe_counts) out << " " << c;
  out << "\n";
  out << "lobe-transitive " << yes_no(r.lobe_transitive) << "\n";
  out << "vertex-transitive " << yes_no(r.vertex_transitive) << "\n";
  out << "edge-transitive " << yes_no(r.edge_transitive);
  if (r.edge_transitive) {
    out << " (case " << to_string(r.edge_case);
    if (r.m) out << ", m = " << r.m->first << "," << r.m->second;
    out << ")";
  } else if (!r.edge_reason.empty()) {
    out << " (" << r.edge_reason << ")";
  }
  out << "\n";
  out << "arc-transitive " << yes_no(r.arc_transitive) << "\n";
  return kExitOk;
}

int cmd_equiv(const Options& o, const std::string& a, const std::string& b, int depth, std::ostream& out) {
  BuildOptions options;
  options.max_vertices = o.max_vertices;
  const bool same = spec_equivalent(load_build_spec(a), load_build_spec(b), depth, options);
  if (o.json) {
    out << json{{"equivalent", same}, {"depth", depth}}.dump(2) << "\n";
  } else {
    out << (same ? "equivalent" : "not equivalent") << "\n";
  }
  return same ? kExitOk : kExitNegative;
}

int cmd_iso(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  const auto map = find_isomorphism(load_graph(a), load_graph(b));
  if (o.json) {
    out << json{{"isomorphic", map.has_value()}, {"map", map ? json(*map) : json(nullptr)}}.dump(2) << "\n";
  } else if (map) {
    for (size_t v = 0; v < map->size(); ++v) out << v << " " << (*map)[v] << "\n";
  } else {
    out << "non-isomorphic\n";
  }
  return map ? kExitOk : kExitNegative;
}

int cmd_named(const Options& o, const std::string& name, const std::vector<int>& params, std::ostream& out) {
  const Graph g = named_graph(name, params);
  if (o.json) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    out << json{{"n", g.vertex_count()}, {"edges", edges}}.dump(2) << "\n";
  } else {
    out << serialize_graph(g);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lobe decomposition, transitivity checks and lobe-transitive graph builder", "lobekit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--max-vertices", o.max_vertices, "Vertex cap for build and equiv")->check(CLI::PositiveNumber);

  std::string path, path2, output, name;
  int k = 1;
  int depth = -1;
  std::vector<int> params;

  auto* decompose_cmd = app.add_subcommand("decompose", "Lobes, cut vertices and lobe classes");
  decompose_cmd->add_option("graph", path, "Graph file")->required();
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism generators, group order and orbits");
  aut_cmd->add_option("graph", path, "Graph file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Transitivity verdicts with orbit cross-check");
  classify_cmd->add_option("graph", path, "Graph file")->required();
  auto* karc_cmd = app.add_subcommand("karc", "Number of k-arc orbits");
  karc_cmd->add_option("graph", path, "Graph file")->required();
  karc_cmd->add_option("-k", k, "Arc length")->required()->check(CLI::NonNegativeNumber);
  auto* build_cmd = app.add_subcommand("build", "Truncation of the graph a build spec describes");
  build_cmd->add_option("spec", path, "Build spec (JSON)")->required();
  build_cmd->add_option("-o,--output", output, "Write the graph here and the sidecar to <output>.json");
  build_cmd->add_option("-d,--depth", depth, "Override the spec's depth")->check(CLI::NonNegativeNumber);
  auto* limit_cmd = app.add_subcommand("limit", "Transitivity of the infinite graph a spec describes");
  limit_cmd->add_option("spec", path, "Build spec (JSON)")->required();
  auto* equiv_cmd = app.add_subcommand("equiv", "Compare the truncations of two specs");
  equiv_cmd->add_option("spec1", path, "Build spec (JSON)")->required();
  equiv_cmd->add_option("spec2", path2, "Build spec (JSON)")->required();
  equiv_cmd->add_option("-d,--depth", depth, "Comparison depth")->required()->check(CLI::NonNegativeNumber);
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism between two graphs");
  iso_cmd->add_option("graph1", path, "Graph file")->required();
  iso_cmd->add_option("graph2", path2, "Graph file")->required();
  auto* named_cmd = app.add_subcommand("named", "Print a catalog graph");
  named_cmd->add_option("name", name, "Catalog name")->required();
  named_cmd->add_option("params", params, "Integer parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(o, path, out);
    if (*aut_cmd) return cmd_aut(o, path, out);
    if (*classify_cmd) return cmd_classify(o, path, out);
    if (*karc_cmd) return cmd_karc(o, path, k, out);
    if (*build_cmd) return cmd_build(o, path, output, depth, out);
    if (*limit_cmd) return cmd_limit(o, path, out);
    if (*equiv_cmd) return cmd_equiv(o, path, path2, depth, out);
    if (*iso_cmd) return cmd_iso(o, path, path2, out);
    if (*named_cmd) return cmd_named(o, name, params, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace lobekit
