#include "lobekit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "lobekit/error.hpp"

namespace lobekit {

namespace {

// Splits a line into whitespace-separated integer fields.
std::optional<std::vector<long long>> parse_ints(std::string_view line) {
  std::vector<long long> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  size_t pos = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (is_skippable(line)) continue;

    auto fields = parse_ints(line);
    if (!fields || fields->size() != 2) {
      throw ParseError(line_no, "expected two integers, got \"" + std::string(line) + "\"");
    }
    long long a = (*fields)[0];
    long long b = (*fields)[1];
    if (!have_header) {
      if (a < 0 || b < 0 || a > 100'000'000) throw ParseError(line_no, "invalid header");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "endpoint out of range: " + std::to_string(a) + " " +
                                    std::to_string(b) + " (n = " + std::to_string(n) + ")");
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (a > b) throw ParseError(line_no, "edge endpoints must be written in increasing order");
    Edge e{static_cast<int>(a), static_cast<int>(b)};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(std::max(line_no, 1), "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges but " +
                                  std::to_string(edges.size()) + " were given");
  }
  return make_graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  out.reserve(16 + 12 * g.edges().size());
  out += std::to_string(g.vertex_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace lobekit
