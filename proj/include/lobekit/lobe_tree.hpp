#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lobekit/graph.hpp"

namespace lobekit {

struct LobeDecomposition;

/// Lobes of a tree-like graph given extensionally: each lobe is a list of
/// host vertices in the order of its local shape graph.
///
/// Both the decomposition of an arbitrary graph and the builder's lobe
/// registry fit this form, so rooted ball comparison is shared between them.
struct LobeSystem {
  int vertex_count = 0;
  std::vector<Graph> shapes;
  std::vector<int> shape_of;                       // lobe -> index into shapes
  std::vector<std::vector<int>> lobe_vertices;     // lobe -> local position -> host vertex
  std::vector<int> vertex_offsets;                 // CSR index into vertex_lobes
  std::vector<int> vertex_lobes;                   // lobe ids per host vertex, ascending

  int lobe_count() const noexcept { return static_cast<int>(lobe_vertices.size()); }
  std::span<const int> lobes_at(int v) const noexcept {
    return {vertex_lobes.data() + vertex_offsets[v], vertex_lobes.data() + vertex_offsets[v + 1]};
  }
  int local_position(int lobe, int v) const;

  /// Fills vertex_offsets / vertex_lobes from lobe_vertices.
  void index_vertices();
};

LobeSystem lobe_system(const Graph& g, const LobeDecomposition& d);

/// Exact isomorphism test through block-cut trees: both trees are rooted at
/// their centres and compared with rooted lobe codes. The cost grows with
/// the number and size of lobes, not with the automorphism group, so it
/// stays fast on large tree-like graphs. Disconnected input is rejected with
/// PreconditionError.
bool block_tree_isomorphic(const Graph& a, const Graph& b);

/// Interned isomorphism codes of rooted pieces of the block-cut structure.
///
/// A branch (lobe L entered at vertex x, budget b) is L with x marked and
/// every other vertex u coloured by the multiset of branches hanging off u,
/// recursively for b further lobe shells. Two branches get the same code
/// exactly when there is an isomorphism of the hanging subgraphs fixing the
/// entry vertex. A ball code is the same construction for a root lobe with
/// no entry vertex.
class RootedCodes {
 public:
  explicit RootedCodes(const LobeSystem& system) : system_(system) {}

  int ball_code(int lobe, int radius);
  int branch_code(int lobe, int entry, int budget);

  /// Multiset of branches at v, excluding one lobe (or none when -1).
  int vertex_code(int v, int excluded_lobe, int budget);

  /// Colours for the lobe's local positions: 0 for the entry vertex (if
  /// any), otherwise 1 + the vertex code with the given budget, or plain 1
  /// when the budget is negative.
  std::vector<int> lobe_colors(int lobe, int entry, int budget);

 private:
  int shape_code(int shape, std::vector<int> colors);

  const LobeSystem& system_;
  std::map<std::pair<int, std::vector<int>>, int> shape_codes_;
  std::map<std::string, int> certificate_codes_;
  std::map<std::vector<int>, int> multiset_codes_;
  std::unordered_map<long long, int> branch_memo_;
};

}  // namespace lobekit
