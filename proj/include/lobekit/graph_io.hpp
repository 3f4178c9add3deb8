#pragma once

#include <string>
#include <string_view>

#include "lobekit/graph.hpp"

namespace lobekit {

// Graph text format:
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n
// Lines starting with '#' and blank lines are ignored. serialize_graph emits
// the canonical form: header, then edge lines sorted lexicographically.

/// Throws ParseError (with line number) on malformed text.
Graph parse_graph(std::string_view text);

std::string serialize_graph(const Graph& g);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);

void write_text_file(const std::string& path, std::string_view text);

}  // namespace lobekit
