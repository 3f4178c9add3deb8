#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lobekit/permutation.hpp"

namespace lobekit {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set for a permutation group, built with the
/// deterministic Schreier-Sims algorithm. Transversals are stored explicitly
/// (one permutation per orbit point), which is fine for the modest degrees
/// this library targets.
class StabilizerChain {
 public:
  StabilizerChain(int degree, std::span<const Permutation> generators);

  int degree() const noexcept { return degree_; }
  BigInt order() const;

  std::vector<int> base() const;
  std::vector<int> basic_orbit_sizes() const;

  /// Membership test by sifting.
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into orbit/transversal, -1 if absent
    std::vector<Permutation> transversal;  // transversal[i](base_point) == orbit[i]
    std::vector<int> generators_checked;   // per orbit index
  };

  void add_level(int base_point);
  void extend_orbit(Level& level, size_t from_generator);
  struct SiftResult {
    Permutation residue;
    size_t level;
  };
  SiftResult sift(Permutation p, size_t from_level) const;
  /// Returns the deepest level that received a new generator, or -1.
  long process_level(size_t i);
  void insert_generator(const Permutation& g, size_t first_level, size_t last_level);

  int degree_;
  std::vector<Level> levels_;
};

}  // namespace lobekit
