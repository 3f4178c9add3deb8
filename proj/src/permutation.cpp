#include "lobekit/permutation.hpp"

#include "lobekit/error.hpp"

namespace lobekit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) throw InputError("permutation images are not a bijection");
    hit[x] = 1;
  }
}

Permutation Permutation::unchecked(std::vector<int> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return unchecked(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return unchecked(std::move(inv));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    int v = start;
    bool first = true;
    while (!done[v]) {
      done[v] = 1;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = images_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree()) throw PreconditionError("compose: degree mismatch");
  std::vector<int> images(inner.degree());
  for (int i = 0; i < inner.degree(); ++i) images[i] = outer(inner(i));
  return Permutation::unchecked(std::move(images));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  }
  return true;
}

}  // namespace lobekit
