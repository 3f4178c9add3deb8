#include "search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <deque>
#include <numeric>

#include "lobekit/error.hpp"

namespace lobekit::detail {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

/// Working memory shared by all refinements of one search.
struct Scratch {
  std::vector<int> count;
  std::vector<char> in_queue;
  std::vector<int> touched;
  std::vector<int> touched_cells;
  std::vector<std::pair<int, int>> keyed;
  std::vector<int> starts;
  std::vector<int> image;
  std::deque<int> queue;
};

/// Ordered partition of 0..n-1. Cells are contiguous ranges of `elements`,
/// identified by their start index. The partition is refined in place and
/// every split is recorded on a trail so that a search can step back. Only
/// the cell structure is restored; order inside a cell carries no meaning.
class Partition {
 public:
  Partition(int n, std::span<const int> colors) : elements_(n), position_(n), cell_(n), end_(n, 0) {
    std::iota(elements_.begin(), elements_.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(elements_.begin(), elements_.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    }
    int start = 0;
    for (int i = 0; i < n; ++i) {
      position_[elements_[i]] = i;
      if (i > 0 && !colors.empty() && colors[elements_[i]] != colors[elements_[i - 1]]) {
        end_[start] = i;
        start = i;
        ++cells_;
      }
      cell_[elements_[i]] = start;
    }
    if (n > 0) {
      end_[start] = n;
      ++cells_;
    }
  }

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool discrete() const noexcept { return cells_ == size(); }
  int cell_end(int start) const noexcept { return end_[start]; }
  std::span<const int> elements() const noexcept { return elements_; }

  std::vector<int> cell_starts() const {
    std::vector<int> out;
    for (int i = 0; i < size(); i = end_[i]) out.push_back(i);
    return out;
  }

  /// First non-singleton cell at or after `from`, which must be a cell start
  /// with only singletons before it.
  int first_open_cell(int from) const {
    int i = from;
    while (i < size() && end_[i] - i == 1) i = end_[i];
    return i;
  }

  size_t mark() const noexcept { return trail_.size(); }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      const Split& s = trail_.back();
      end_[s.start] = s.end;
      for (int i = s.first_moved; i < s.end; ++i) cell_[elements_[i]] = s.start;
      cells_ = s.cells_before;
      trail_.pop_back();
    }
  }

  /// Splits v off the back of its cell; returns the start of the new singleton.
  int individualize(int v) {
    const int s = cell_[v];
    const int e = end_[s];
    place(v, e - 1);
    trail_.push_back({s, e, e - 1, cells_});
    end_[s] = e - 1;
    end_[e - 1] = e;
    cell_[v] = e - 1;
    ++cells_;
    return e - 1;
  }

  /// Refines to the coarsest equitable partition finer than the current one,
  /// starting from the given splitter cells. A cell splits by the number of
  /// neighbours in the splitter: untouched elements stay in front, touched
  /// ones follow in increasing count, so the work is proportional to the
  /// touched elements. Returns a hash of the splitting trace, which depends
  /// only on the isomorphism type of the coloured node.
  std::uint64_t refine(const Graph& g, std::span<const int> splitters, Scratch& t) {
    const int n = size();
    if (t.count.size() != static_cast<size_t>(n)) {
      t.count.assign(n, 0);
      t.in_queue.assign(n, 0);
    }
    std::uint64_t trace = 0;
    auto& queue = t.queue;
    queue.clear();
    for (int s : splitters) {
      if (!t.in_queue[s]) {
        t.in_queue[s] = 1;
        queue.push_back(s);
      }
    }
    auto& keyed = t.keyed;
    auto& starts = t.starts;
    while (!queue.empty() && !discrete()) {
      const int w = queue.front();
      queue.pop_front();
      t.in_queue[w] = 0;
      const int w_end = end_[w];
      t.touched.clear();
      for (int i = w; i < w_end; ++i) {
        for (int u : g.neighbors(elements_[i])) {
          if (t.count[u]++ == 0) t.touched.push_back(u);
        }
      }
      // (cell, count) keys; vertex ids only break ties deterministically.
      keyed.clear();
      for (int u : t.touched) keyed.emplace_back(cell_[u], u);
      std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return t.count[a.second] < t.count[b.second];
      });
      for (size_t lo = 0; lo < keyed.size();) {
        const int s = keyed[lo].first;
        size_t hi = lo;
        while (hi < keyed.size() && keyed[hi].first == s) ++hi;
        const int e = end_[s];
        const int k = static_cast<int>(hi - lo);
        const int low = t.count[keyed[lo].second];
        const int high = t.count[keyed[hi - 1].second];
        if (k == e - s && low == high) {
          trace = mix(trace, (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint32_t>(low));
          lo = hi;
          continue;
        }
        // Touched elements go to the back of the cell in increasing count.
        for (int i = 0; i < k; ++i) place(keyed[lo + i].second, e - k + i);
        starts.clear();
        if (k < e - s) {
          starts.push_back(s);
          trace = mix(trace, static_cast<std::uint64_t>(s) << 32);
        }
        for (int i = 0; i < k; ++i) {
          const int c = t.count[keyed[lo + i].second];
          if (i == 0 || c != t.count[keyed[lo + i - 1].second]) {
            starts.push_back(e - k + i);
            trace = mix(trace, (static_cast<std::uint64_t>(e - k + i) << 32) | static_cast<std::uint32_t>(c));
          }
        }
        trail_.push_back({s, e, starts[1], cells_});
        for (size_t j = 0; j < starts.size(); ++j) {
          const int cs = starts[j];
          const int ce = j + 1 < starts.size() ? starts[j + 1] : e;
          end_[cs] = ce;
          if (j > 0) {
            for (int i = cs; i < ce; ++i) cell_[elements_[i]] = cs;
          }
        }
        cells_ += static_cast<int>(starts.size()) - 1;
        if (t.in_queue[s]) {
          for (size_t j = 1; j < starts.size(); ++j) {
            t.in_queue[starts[j]] = 1;
            queue.push_back(starts[j]);
          }
        } else {
          size_t largest = 0;
          for (size_t j = 1; j < starts.size(); ++j) {
            const int size_j = end_[starts[j]] - starts[j];
            if (size_j > end_[starts[largest]] - starts[largest]) largest = j;
          }
          for (size_t j = 0; j < starts.size(); ++j) {
            if (j == largest) continue;
            t.in_queue[starts[j]] = 1;
            queue.push_back(starts[j]);
          }
        }
        lo = hi;
      }
      for (int u : t.touched) t.count[u] = 0;
    }
    for (int s : queue) t.in_queue[s] = 0;
    return mix(trace, static_cast<std::uint64_t>(cells_));
  }

 private:
  struct Split {
    int start;
    int end;
    int first_moved;
    int cells_before;
  };

  void place(int v, int pos) {
    const int u = elements_[pos];
    const int from = position_[v];
    elements_[pos] = v;
    elements_[from] = u;
    position_[v] = pos;
    position_[u] = from;
  }

  std::vector<int> elements_;
  std::vector<int> position_;
  std::vector<int> cell_;
  std::vector<int> end_;
  int cells_ = 0;
  std::vector<Split> trail_;
};

using LeafCode = std::vector<std::uint64_t>;

class Searcher {
 public:
  Searcher(const Graph& g, std::span<const int> colors)
      : g_(g), colors_(colors), partition_(g.vertex_count(), colors) {}

  SearchOutput run() {
    const int n = g_.vertex_count();
    const std::vector<int> starts = partition_.cell_starts();
    std::vector<std::uint64_t> traces = {partition_.refine(g_, starts, scratch_)};
    std::vector<int> path;
    explore(path, traces, true, 0, 0);

    SearchOutput out;
    out.generators = std::move(generators_);
    out.labeling.assign(n, 0);
    for (int i = 0; i < n; ++i) out.labeling[best_.leaf[i]] = i;
    out.certificate = encode_certificate(out.labeling);
    return out;
  }

 private:
  struct Leaf {
    std::vector<int> leaf;
    LeafCode code;  // filled on demand
    std::vector<int> path;
    std::vector<std::uint64_t> traces;
  };

  LeafCode leaf_code(std::span<const int> leaf) const {
    std::vector<int> pos(leaf.size());
    for (size_t i = 0; i < leaf.size(); ++i) pos[leaf[i]] = static_cast<int>(i);
    LeafCode code;
    code.reserve(g_.edges().size());
    for (const Edge& e : g_.edges()) {
      std::uint64_t a = static_cast<std::uint32_t>(pos[e.u]);
      std::uint64_t b = static_cast<std::uint32_t>(pos[e.v]);
      if (a > b) std::swap(a, b);
      code.push_back((a << 32) | b);
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  std::string encode_certificate(const std::vector<int>& labeling) const {
    const int n = g_.vertex_count();
    std::vector<std::int32_t> words;
    words.reserve(2 + n + 2 * g_.edges().size());
    words.push_back(n);
    words.push_back(colors_.empty() ? 0 : 1);
    if (!colors_.empty()) {
      std::vector<int> by_position(n);
      for (int v = 0; v < n; ++v) by_position[labeling[v]] = colors_[v];
      words.insert(words.end(), by_position.begin(), by_position.end());
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g_.edges().size());
    for (const Edge& e : g_.edges()) {
      int a = labeling[e.u];
      int b = labeling[e.v];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      words.push_back(a);
      words.push_back(b);
    }
    std::string bytes(words.size() * sizeof(std::int32_t), '\0');
    std::memcpy(bytes.data(), words.data(), bytes.size());
    return bytes;
  }

  static size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void add_automorphism(std::span<const int> from_leaf, std::span<const int> to_leaf) {
    std::vector<int> images(from_leaf.size());
    std::vector<int> moved;
    for (size_t i = 0; i < from_leaf.size(); ++i) {
      images[from_leaf[i]] = to_leaf[i];
      if (from_leaf[i] != to_leaf[i]) moved.push_back(from_leaf[i]);
    }
    if (moved.empty()) return;
    generators_.push_back(Permutation::unchecked(std::move(images)));
    supports_.push_back(std::move(moved));
  }

  /// Orbit representatives under the generators that fix `path` pointwise.
  /// Only moved points are visited, so sparse generators stay cheap.
  std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
    std::vector<int> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (size_t k = 0; k < generators_.size(); ++k) {
      const Permutation& p = generators_[k];
      if (std::any_of(path.begin(), path.end(), [&](int v) { return p(v) != v; })) continue;
      for (int v : supports_[k]) {
        const int a = find(v);
        const int b = find(p(v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    return parent;
  }

  // Leaves are ordered by their trace sequence, then by their edge code.
  // `same_as_first` says the traces so far equal those of the first path;
  // `versus_best` is the sign of the trace comparison with the best path.
  // Returns -1 to continue normally, or the path length to unwind to.
  long explore(std::vector<int>& path, std::vector<std::uint64_t>& traces, bool same_as_first, int versus_best,
               int hint) {
    Partition& node = partition_;
    if (node.discrete()) return visit_leaf(path, traces, same_as_first, versus_best);

    const int target = node.first_open_cell(hint);
    std::vector<int> children(node.elements().begin() + target,
                              node.elements().begin() + node.cell_end(target));
    std::sort(children.begin(), children.end());

    const long level = static_cast<long>(path.size());
    const size_t depth = traces.size();
    std::vector<int> explored;
    std::vector<int> orbit;
    size_t orbit_generators = static_cast<size_t>(-1);
    for (int child : children) {
      if (!explored.empty()) {
        if (orbit_generators != generators_.size()) {
          orbit = stabilizer_orbits(path);
          orbit_generators = generators_.size();
        }
        auto root = [&](int x) {
          while (orbit[x] != x) x = orbit[x];
          return x;
        };
        const int r = root(child);
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return root(e) == r; })) continue;
      }
      const size_t mark = node.mark();
      const int singleton = node.individualize(child);
      const std::uint64_t trace = mix(node.refine(g_, std::span<const int>(&singleton, 1), scratch_), singleton);

      bool child_first = same_as_first;
      int child_best = versus_best;
      if (have_leaf_) {
        child_first = same_as_first && depth < first_.traces.size() && first_.traces[depth] == trace;
        if (versus_best == 0) {
          if (depth >= best_.traces.size()) {
            child_best = 1;
          } else if (trace != best_.traces[depth]) {
            child_best = trace < best_.traces[depth] ? -1 : 1;
          }
        }
        if (!child_first && child_best > 0) {
          node.undo(mark);
          continue;
        }
      }
      explored.push_back(child);
      path.push_back(child);
      traces.push_back(trace);
      const long unwind = explore(path, traces, child_first, child_best, target);
      traces.pop_back();
      path.pop_back();
      node.undo(mark);
      if (unwind >= 0 && unwind < level) return unwind;
    }
    return -1;
  }

  // Whether mapping `from` onto the current leaf position by position is
  // an automorphism. Cells respect colours, so only edges need checking.
  bool maps_onto(const std::vector<int>& from) const {
    std::span<const int> to = partition_.elements();
    std::vector<int>& image = scratch_.image;
    image.resize(from.size());
    for (size_t i = 0; i < from.size(); ++i) image[from[i]] = to[i];
    return std::all_of(g_.edges().begin(), g_.edges().end(),
                       [&](const Edge& e) { return g_.has_edge(image[e.u], image[e.v]); });
  }

  long visit_leaf(const std::vector<int>& path, const std::vector<std::uint64_t>& traces, bool same_as_first,
                  int versus_best) {
    std::span<const int> elements = partition_.elements();
    if (!have_leaf_) {
      first_ = {{elements.begin(), elements.end()}, {}, path, traces};
      best_ = first_;
      have_leaf_ = true;
      return -1;
    }
    if (versus_best == 0 && traces.size() != best_.traces.size()) {
      versus_best = traces.size() < best_.traces.size() ? -1 : 1;
    }
    if (same_as_first && traces.size() == first_.traces.size() && maps_onto(first_.leaf)) {
      add_automorphism(first_.leaf, elements);
      return static_cast<long>(common_prefix(path, first_.path));
    }
    if (versus_best == 0 && maps_onto(best_.leaf)) {
      add_automorphism(best_.leaf, elements);
      return static_cast<long>(common_prefix(path, best_.path));
    }
    if (versus_best < 0) {
      best_ = {{elements.begin(), elements.end()}, {}, path, traces};
    } else if (versus_best == 0) {
      if (best_.code.empty()) best_.code = leaf_code(best_.leaf);
      LeafCode code = leaf_code(elements);
      if (code < best_.code) best_ = {{elements.begin(), elements.end()}, std::move(code), path, traces};
    }
    return -1;
  }

  const Graph& g_;
  std::span<const int> colors_;
  Partition partition_;
  mutable Scratch scratch_;
  std::vector<Permutation> generators_;
  std::vector<std::vector<int>> supports_;
  Leaf first_;
  Leaf best_;
  bool have_leaf_ = false;
};

}  // namespace

SearchOutput canonical_search(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.vertex_count()) {
    throw PreconditionError("colour vector size does not match vertex count");
  }
  return Searcher(g, colors).run();
}

}  // namespace lobekit::detail
