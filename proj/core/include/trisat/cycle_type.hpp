#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trisat {

class Permutation;

/// Conjugacy-class label in Sym_m: the multiset of cycle lengths, fixed
/// points included, kept in descending order.
class CycleType {
 public:
  CycleType() = default;
  /// Throws std::invalid_argument on non-positive parts.
  explicit CycleType(std::vector<int> parts);

  /// Accepts "3^3", "2^4 1", "2^4.1^3", "5.3.1" and "(2)^4(1)^3". When
  /// degree > 0 the type is padded with fixed points up to that degree
  /// (and must not exceed it).
  static CycleType parse(std::string_view text, int degree = 0);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  int cycle_count() const { return static_cast<int>(parts_.size()); }
  std::uint64_t order() const;
  /// Even permutation iff the number of even-length cycles is even.
  bool is_even() const;
  /// |class| = m! / prod(b_i^{n_i} n_i!).
  std::uint64_t class_size() const;
  /// The lexicographically smallest permutation of this type: shortest
  /// cycles first, each on consecutive points.
  Permutation min_representative() const;
  /// "(3)^2(1)^2" style.
  std::string str() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

/// All cycle types of degree m (partitions of m), in descending
/// lexicographic order of their parts.
std::vector<CycleType> all_cycle_types(int degree);

/// Even cycle types of degree m whose order is exactly n (or divides n).
std::vector<CycleType> even_cycle_types_of_order(int degree, std::uint64_t n, bool dividing = false);

}  // namespace trisat
