#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trisat/permutation.hpp"

namespace trisat {

/// Base and strong generating set built by the deterministic
/// Schreier–Sims algorithm with explicit transversals.
class StabilizerChain {
 public:
  /// All generators must share one degree. An empty list (or only
  /// identities) gives the trivial group.
  explicit StabilizerChain(std::span<const Permutation> generators);

  int degree() const { return degree_; }
  /// Exact group order; throws std::overflow_error above 2^64 - 1.
  std::uint64_t order() const;
  std::vector<int> base() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x, when x lies in the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  // Returns the residue of sifting p from level `from` downward and the
  // level where sifting stopped (levels_.size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  // Appends a level whose base point is the first point moved by g.
  void add_level(const Permutation& g);
  // Adds g to the strong generators of levels 0..through (g fixes their
  // base points) and rebuilds their orbits.
  void add_strong_generator(const Permutation& g, std::size_t through);
  void rebuild_orbit(Level& level) const;
  // Finds a Schreier generator of level i that fails to sift through the
  // levels below and adds its residue; returns the level it was added at.
  std::optional<std::size_t> repair_level(std::size_t i);

  int degree_ = 0;
  std::vector<Level> levels_;
};

/// Order of the group generated by gens. Throws std::invalid_argument for
/// an empty list or mixed degrees.
std::uint64_t group_order(std::span<const Permutation> gens);

/// Orbit of a point under the group generated by gens, ascending.
std::vector<int> orbit(std::span<const Permutation> gens, int point);
bool is_transitive(std::span<const Permutation> gens);

}  // namespace trisat
