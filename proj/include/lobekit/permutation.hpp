#pragma once

#include <span>
#include <string>
#include <vector>

#include "lobekit/graph.hpp"

namespace lobekit {

/// Bijection on 0..degree-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> images);

  /// Skips validation; for images produced by the library itself.
  static Permutation unchecked(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const noexcept { return images_[v]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// (outer ∘ inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace lobekit
