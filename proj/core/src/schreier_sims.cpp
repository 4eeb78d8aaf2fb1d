#include "trisat/schreier_sims.hpp"

#include <algorithm>
#include <optional>
#include <limits>
#include <stdexcept>

namespace trisat {

StabilizerChain::StabilizerChain(std::span<const Permutation> generators) {
  if (!generators.empty()) degree_ = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw std::invalid_argument("generators have mixed degrees");
  }
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    if (levels_.empty()) add_level(g);
    add_strong_generator(g, 0);
  }
  // Deterministic Schreier-Sims: levels below i form a BSGS of their
  // subgroup; working upward, each level's Schreier generators must sift.
  std::size_t i = levels_.size();
  while (i > 0) {
    if (auto added = repair_level(i - 1)) {
      i = *added + 1;
    } else {
      --i;
    }
  }
}

void StabilizerChain::add_level(const Permutation& g) {
  Level fresh;
  const auto images = g.images();
  for (int x = 0; x < degree_; ++x) {
    if (images[static_cast<std::size_t>(x)] != x) {
      fresh.base_point = x;
      break;
    }
  }
  levels_.push_back(std::move(fresh));
  rebuild_orbit(levels_.back());
}

void StabilizerChain::add_strong_generator(const Permutation& g, std::size_t through) {
  // A generator that fixes every base point of levels < through belongs to
  // each of those stabilizers, so it joins all of their generating sets.
  for (std::size_t l = 0; l <= through; ++l) {
    levels_[l].generators.push_back(g);
    rebuild_orbit(levels_[l]);
  }
}

std::optional<std::size_t> StabilizerChain::repair_level(std::size_t i) {
  for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[i].generators.size(); ++si) {
      const Level& level = levels_[i];
      const int x = level.orbit[oi];
      const Permutation& s = level.generators[si];
      Permutation schreier = *level.transversal[static_cast<std::size_t>(x)] * s *
                             level.transversal[static_cast<std::size_t>(s(x))]->inverse();
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(std::move(schreier), i + 1);
      if (residue.is_identity()) continue;
      if (stop == levels_.size()) add_level(residue);
      add_strong_generator(residue, stop);
      return stop;
    }
  }
  return std::nullopt;
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.orbit.clear();
  level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const int x = level.orbit[i];
    const Permutation& ux = *level.transversal[static_cast<std::size_t>(x)];
    for (const auto& s : level.generators) {
      const int y = s(x);
      if (!level.transversal[static_cast<std::size_t>(y)]) {
        level.transversal[static_cast<std::size_t>(y)] = ux * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const int image = p(level.base_point);
    const auto& u = level.transversal[static_cast<std::size_t>(image)];
    if (!u) return {std::move(p), i};
    p = p * u->inverse();
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    const auto size = static_cast<std::uint64_t>(level.orbit.size());
    if (result > std::numeric_limits<std::uint64_t>::max() / size) {
      throw std::overflow_error("group order exceeds 64 bits");
    }
    result *= size;
  }
  return result;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::uint64_t group_order(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("group_order needs at least one generator");
  return StabilizerChain(gens).order();
}

std::vector<int> orbit(std::span<const Permutation> gens, int point) {
  if (gens.empty()) return {point};
  const int m = gens.front().degree();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const int y = g(out[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(std::span<const Permutation> gens) {
  if (gens.empty()) return false;
  return static_cast<int>(orbit(gens, 0).size()) == gens.front().degree();
}

}  // namespace trisat
