#include "lobekit/schreier_sims.hpp"

#include "lobekit/error.hpp"

namespace lobekit {

namespace {

int first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p(i) != i) return i;
  }
  return -1;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree, std::span<const Permutation> generators) : degree_(degree) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
    if (g.is_identity()) continue;
    size_t j = 0;
    while (j < levels_.size() && g(levels_[j].base_point) == levels_[j].base_point) ++j;
    if (j == levels_.size()) add_level(first_moved_point(g));
    insert_generator(g, 0, j);
  }
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    long deepest = process_level(static_cast<size_t>(i));
    i = deepest >= 0 ? deepest : i - 1;
  }
}

void StabilizerChain::add_level(int base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit = {base_point};
  level.slot.assign(degree_, -1);
  level.slot[base_point] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  level.generators_checked.push_back(0);
  levels_.push_back(std::move(level));
}

void StabilizerChain::extend_orbit(Level& level, size_t from_generator) {
  const size_t old_size = level.orbit.size();
  for (size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const size_t first = idx < old_size ? from_generator : 0;
    for (size_t s = first; s < level.generators.size(); ++s) {
      const int image = level.generators[s](level.orbit[idx]);
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      level.transversal.push_back(compose(level.generators[s], level.transversal[idx]));
      level.generators_checked.push_back(0);
    }
  }
}

void StabilizerChain::insert_generator(const Permutation& g, size_t first_level, size_t last_level) {
  for (size_t l = first_level; l <= last_level; ++l) {
    levels_[l].generators.push_back(g);
    extend_orbit(levels_[l], levels_[l].generators.size() - 1);
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation p, size_t from_level) const {
  for (size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const int image = p(level.base_point);
    if (level.slot[image] < 0) return {std::move(p), l};
    p = compose(level.transversal[level.slot[image]].inverse(), p);
  }
  return {std::move(p), levels_.size()};
}

long StabilizerChain::process_level(size_t i) {
  for (size_t idx = 0; idx < levels_[i].orbit.size(); ++idx) {
    while (levels_[i].generators_checked[idx] < static_cast<int>(levels_[i].generators.size())) {
      const size_t s = static_cast<size_t>(levels_[i].generators_checked[idx]++);
      const Level& level = levels_[i];
      const Permutation& gen = level.generators[s];
      const int image = gen(level.orbit[idx]);
      // Schreier generator u_{image}^{-1} * gen * u_{orbit[idx]} fixes the base point.
      Permutation h =
          compose(level.transversal[level.slot[image]].inverse(), compose(gen, level.transversal[idx]));
      if (h.is_identity()) continue;
      auto [residue, drop] = sift(std::move(h), i + 1);
      if (residue.is_identity()) continue;
      if (drop == levels_.size()) add_level(first_moved_point(residue));
      insert_generator(residue, i + 1, drop);
      return static_cast<long>(drop);
    }
  }
  return -1;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const Level& level : levels_) result *= level.orbit.size();
  return result;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> out;
  for (const Level& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<int> StabilizerChain::basic_orbit_sizes() const {
  std::vector<int> out;
  for (const Level& level : levels_) out.push_back(static_cast<int>(level.orbit.size()));
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).residue.is_identity();
}

}  // namespace lobekit
