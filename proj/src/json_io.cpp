#include "lobekit/json_io.hpp"

#include <set>

#include "lobekit/error.hpp"
#include "lobekit/graph_io.hpp"

namespace lobekit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("build spec: " + what); }

long long integer_field(const json& value, const std::string& where) {
  if (value.is_number_integer()) return value.get<long long>();
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "aleph0" || text == "ℵ₀" || text == "infinity" || text == "inf") {
      bad(where + ": infinite multiplicities are not supported, only finite non-negative integers");
    }
  }
  if (value.is_number_float()) bad(where + ": expected an integer, got " + value.dump());
  bad(where + ": expected an integer");
}

std::vector<int> int_list(const json& value, const std::string& where) {
  if (!value.is_array()) bad(where + ": expected an array of integers");
  std::vector<int> out;
  for (const json& x : value) {
    const long long v = integer_field(x, where);
    if (v < INT32_MIN || v > INT32_MAX) bad(where + ": integer out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void only_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : object.items()) {
    if (!allowed.count(key)) bad(where + ": unknown field \"" + key + "\"");
  }
}

const json& required(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) bad(where + ": missing field \"" + key + "\"");
  return *it;
}

json vertex_lists(const std::vector<std::vector<int>>& lists) {
  json out = json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

json optional_pair(const std::optional<std::pair<long long, long long>>& m) {
  if (!m) return nullptr;
  return json::array({m->first, m->second});
}

}  // namespace

RawBuildSpec parse_build_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("build spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  only_keys(doc, {"lambda0", "h", "r_partition", "mu", "depth"}, "spec");

  RawBuildSpec raw;
  const json& lambda0 = required(doc, "lambda0", "spec");
  if (!lambda0.is_object()) bad("lambda0 must be an object");
  only_keys(lambda0, {"n", "edges"}, "lambda0");
  const long long n = integer_field(required(lambda0, "n", "lambda0"), "lambda0.n");
  if (n < 0 || n > 1'000'000) bad("lambda0.n out of range");
  raw.n = static_cast<int>(n);
  const json& edges = required(lambda0, "edges", "lambda0");
  if (!edges.is_array()) bad("lambda0.edges must be an array of pairs");
  for (const json& e : edges) {
    const auto pair = int_list(e, "lambda0.edges");
    if (pair.size() != 2) bad("lambda0.edges entries must be pairs");
    raw.edges.emplace_back(pair[0], pair[1]);
  }

  const json& h = required(doc, "h", "spec");
  if (h.is_string()) {
    if (h.get<std::string>() != "aut") bad("h must be \"aut\" or an array of image arrays");
  } else if (h.is_array()) {
    raw.h.emplace();
    for (const json& g : h) raw.h->push_back(int_list(g, "h"));
  } else {
    bad("h must be \"aut\" or an array of image arrays");
  }

  const json& r = required(doc, "r_partition", "spec");
  if (!r.is_array()) bad("r_partition must be an array of vertex arrays");
  for (const json& cell : r) raw.r_partition.push_back(int_list(cell, "r_partition"));

  const json& mu = required(doc, "mu", "spec");
  if (!mu.is_array()) bad("mu must be an array");
  for (const json& entry : mu) {
    if (!entry.is_object()) bad("mu entries must be objects");
    only_keys(entry, {"k", "values"}, "mu entry");
    RawBuildSpec::MuEntry m;
    m.k = integer_field(required(entry, "k", "mu entry"), "mu.k");
    const json& values = required(entry, "values", "mu entry");
    if (!values.is_object()) bad("mu.values must be an object mapping orbit index to count");
    for (const auto& [key, value] : values.items()) {
      long long j = 0;
      size_t used = 0;
      try {
        j = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) bad("mu.values key \"" + key + "\" is not an orbit index");
      const std::string where = "mu_" + std::to_string(m.k) + "(" + key + ")";
      m.values.emplace_back(j, integer_field(value, where));
    }
    raw.mu.push_back(std::move(m));
  }

  raw.depth = integer_field(required(doc, "depth", "spec"), "depth");
  return raw;
}

BuildSpec load_build_spec(const std::string& path) { return validate_spec(parse_build_spec(read_text_file(path))); }

json permutation_json(const Permutation& p) { return json(std::vector<int>(p.images().begin(), p.images().end())); }

json generators_json(const GeneratorSet& gens) {
  json out = json::array();
  for (const Permutation& p : gens.generators) out.push_back(permutation_json(p));
  return out;
}

json orbits_json(const OrbitPartition& orbits) { return vertex_lists(orbits.cells); }

json decomposition_json(const LobeDecomposition& d) {
  json lobes = json::array();
  for (int l = 0; l < d.lobe_count(); ++l) {
    json edges = json::array();
    for (const Edge& e : d.lobes[l].edges) edges.push_back({e.u, e.v});
    lobes.push_back({{"id", l},
                     {"vertices", d.lobes[l].vertices},
                     {"edges", edges},
                     {"class", d.classes.class_of[l]},
                     {"sigma", d.classes.sigma[l]},
                     {"labels", d.classes.label[l]}});
  }
  json tree = json::array();
  for (auto [lobe, v] : d.tree_edges) tree.push_back({lobe, v});
  json classes = json::array();
  for (int k = 0; k < d.classes.class_count(); ++k) {
    json members = json::array();
    for (int l = 0; l < d.lobe_count(); ++l) {
      if (d.classes.class_of[l] == k) members.push_back(l);
    }
    classes.push_back({{"representative", d.classes.representatives[k]},
                       {"lobes", members},
                       {"orbit_count", d.classes.orbit_count[k]},
                       {"orbit_of", d.classes.orbit_of[k]}});
  }
  return {{"vertex_count", d.vertex_count},
          {"lobes", lobes},
          {"cut_vertices", d.cut_vertices},
          {"tree_edges", tree},
          {"classes", classes}};
}

json classification_json(const ClassificationReport& r) {
  json out;
  out["connectivity"] = std::string(to_string(r.connectivity));
  out["lobe_count"] = r.lobe_count;
  out["oracle"] = {{"vertex_orbits", r.direct.vertex_orbits},
                   {"edge_orbits", r.direct.edge_orbits},
                   {"arc_orbits", r.direct.arc_orbits},
                   {"lobe_orbits", r.direct.lobe_orbits ? json(*r.direct.lobe_orbits) : json(nullptr)},
                   {"group_order", r.direct.group_order.str()}};
  json theorem = nullptr;
  if (r.vertex) {
    theorem = json::object();
    theorem["vertex_transitive"] = {{"holds", r.vertex->holds},
                                    {"witness", r.vertex->holds ? json(nullptr)
                                                                : json({{"k", r.vertex->k},
                                                                        {"j", r.vertex->j},
                                                                        {"u", r.vertex->u},
                                                                        {"v", r.vertex->v}})}};
    json lobe_witness = nullptr;
    if (r.lobe->failure == LobeFailure::lobes_not_isomorphic) {
      lobe_witness = {{"lobes", {r.lobe->lobe_pair.first, r.lobe->lobe_pair.second}}};
    } else if (r.lobe->failure != LobeFailure::none) {
      lobe_witness = {{"i", r.lobe->i}, {"j", r.lobe->j}, {"v", r.lobe->v}};
    }
    theorem["lobe_transitive"] = {{"holds", r.lobe->holds},
                                  {"failure", std::string(to_string(r.lobe->failure))},
                                  {"witness", lobe_witness},
                                  {"p_orbits", vertex_lists(r.lobe->p_orbits)},
                                  {"q_orbits", vertex_lists(r.lobe->q_orbits)}};
    theorem["edge_transitive"] = {{"holds", r.edge->holds},
                                  {"case", std::string(to_string(r.edge->edge_case))},
                                  {"m", optional_pair(r.edge->m)},
                                  {"reason", r.edge->reason}};
    theorem["arc_transitive"] = {{"holds", r.arc->holds}, {"reason", r.arc->reason}};
  }
  out["theorem"] = theorem;
  out["tree"] = r.is_tree ? json({{"edge_transitive", r.tree.has_value()},
                                  {"valences", r.tree ? json({r.tree->first, r.tree->second}) : json(nullptr)},
                                  {"arc_transitive", r.tree && r.tree->first == r.tree->second}})
                          : json(nullptr);
  out["consistent"] = r.consistent;
  return out;
}

json limit_json(const LimitReport& r, const BuildSpec& spec) {
  json mu = json::array();
  for (const auto& row : spec.mu) mu.push_back(row);
  return {{"q", vertex_lists(spec.q)},
          {"r", vertex_lists(spec.r)},
          {"mu", mu},
          {"lambda0",
           {{"orbits", vertex_lists(r.lambda0_orbits)},
            {"vertex_transitive", r.lambda0_vertex_transitive},
            {"edge_transitive", r.lambda0_edge_transitive},
            {"arc_transitive", r.lambda0_arc_transitive}}},
          {"tau", r.tau},
          {"lobe_counts", r.lobe_counts},
          {"lobe_transitive", r.lobe_transitive},
          {"vertex_transitive", r.vertex_transitive},
          {"edge_transitive", r.edge_transitive},
          {"edge_case", std::string(to_string(r.edge_case))},
          {"m", optional_pair(r.m)},
          {"edge_reason", r.edge_reason},
          {"arc_transitive", r.arc_transitive}};
}

json build_sidecar_json(const BuildResult& result, const BuildSpec& spec) {
  json lobes = json::array();
  for (int l = 0; l < result.lobe_count(); ++l) {
    lobes.push_back({{"sigma", result.lobe_sigma[l]}, {"depth", result.lobe_depth[l]}});
  }
  return {{"depth", result.depth},
          {"vertex_count", result.graph.vertex_count()},
          {"edge_count", result.graph.edge_count()},
          {"lambda0_vertex_count", spec.lambda0.vertex_count()},
          {"q", vertex_lists(spec.q)},
          {"lobes", lobes},
          {"vertex_depth", result.vertex_depth}};
}

}  // namespace lobekit
