#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace trisat {

class CycleType;

/// A bijection of {0, ..., m-1}, stored as its image tuple.
///
/// Products compose left to right: (p * q)(x) = q(p(x)). Ordering is
/// lexicographic on the image tuple.
class Permutation {
 public:
  using Point = int;

  Permutation() = default;

  /// Throws std::invalid_argument unless images is a bijection of 0..m-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(int degree, std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<Point>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator()(Point x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  Permutation inverse() const;
  /// Order as a product of cycle lengths' lcm.
  std::uint64_t order() const;
  CycleType cycle_type() const;
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation with fixed points omitted, e.g. "(0 1 2)(3 4)".
  std::string str() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Order of lhs * rhs without materializing the product. `scratch` must
/// have at least degree() entries.
std::uint64_t product_order(const Permutation& lhs, const Permutation& rhs, std::vector<char>& scratch);

}  // namespace trisat
