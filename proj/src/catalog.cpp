#include "lobekit/catalog.hpp"

#include "lobekit/error.hpp"

namespace lobekit {

namespace {

void expect_params(std::string_view name, const std::vector<int>& params, size_t count) {
  if (params.size() != count) {
    throw InputError(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return make_graph(n, edges);
}

Graph path(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make_graph(n, edges);
}

Graph star(int n) {
  if (n < 1) throw InputError("star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  return make_graph(n + 1, edges);
}

Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw InputError("complete_bipartite needs s, t >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < t; ++b) edges.push_back({a, s + b});
  }
  return make_graph(s + t, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return make_graph(10, edges);
}

Graph folkman() {
  std::vector<Edge> edges;
  int index = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b, ++index) {
      for (int copy = 0; copy < 2; ++copy) {
        edges.push_back({index, 10 + 2 * a + copy});
        edges.push_back({index, 10 + 2 * b + copy});
      }
    }
  }
  return make_graph(20, edges);
}

Graph holt() {
  auto id = [](int x, int y) { return 3 * (((x % 9) + 9) % 9) + ((y % 3) + 3) % 3; };
  std::vector<Edge> edges;
  for (int x = 0; x < 9; ++x) {
    for (int y = 0; y < 3; ++y) {
      edges.push_back({id(x, y), id(4 * x + 1, y + 1)});
      edges.push_back({id(x, y), id(4 * x - 1, y + 1)});
    }
  }
  return make_graph(27, edges);
}

}  // namespace

Graph named_graph(std::string_view name, const std::vector<int>& params) {
  if (name == "k4") {
    expect_params(name, params, 0);
    return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "petersen") {
    expect_params(name, params, 0);
    return petersen();
  }
  if (name == "cycle") {
    expect_params(name, params, 1);
    return cycle(params[0]);
  }
  if (name == "path") {
    expect_params(name, params, 1);
    return path(params[0]);
  }
  if (name == "star") {
    expect_params(name, params, 1);
    return star(params[0]);
  }
  if (name == "complete_bipartite") {
    expect_params(name, params, 2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "chorded_5_cycle") {
    expect_params(name, params, 0);
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  }
  if (name == "folkman") {
    expect_params(name, params, 0);
    return folkman();
  }
  if (name == "holt") {
    expect_params(name, params, 0);
    return holt();
  }
  throw InputError("unknown catalog graph \"" + std::string(name) + "\"");
}

std::vector<std::string> catalog_names() {
  return {"k4",    "petersen",           "cycle",           "path",    "star",
          "complete_bipartite", "chorded_5_cycle", "folkman", "holt"};
}

int catalog_valence(std::string_view name, const std::vector<int>& params, int v) {
  if (name == "k4" || name == "petersen") return 3;
  if (name == "cycle") return 2;
  if (name == "folkman" || name == "holt") return 4;
  if (name == "path") {
    if (params.at(0) == 1) return 0;
    return (v == 0 || v == params[0] - 1) ? 1 : 2;
  }
  if (name == "star") return v == 0 ? params.at(0) : 1;
  if (name == "complete_bipartite") return v < params.at(0) ? params.at(1) : params.at(0);
  if (name == "chorded_5_cycle") return (v == 0 || v == 2) ? 3 : 2;
  throw InputError("unknown catalog graph \"" + std::string(name) + "\"");
}

}  // namespace lobekit
