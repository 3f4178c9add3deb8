#pragma once

#include <span>
#include <string>
#include <vector>

#include "lobekit/graph.hpp"
#include "lobekit/permutation.hpp"

namespace lobekit::detail {

struct SearchOutput {
  std::vector<Permutation> generators;
  std::vector<int> labeling;  // vertex -> canonical position
  std::string certificate;
};

/// Individualization-refinement search over ordered partitions. One pass
/// yields generators of the colour-preserving automorphism group and a
/// canonical labeling. `colors` may be empty (all vertices alike); otherwise
/// it holds one integer per vertex and cells are ordered by colour value.
SearchOutput canonical_search(const Graph& g, std::span<const int> colors);

}  // namespace lobekit::detail
