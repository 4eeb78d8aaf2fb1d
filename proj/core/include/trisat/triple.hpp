#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace trisat {

/// True when 1/a + 1/b + 1/c < 1.
constexpr bool is_hyperbolic(long a, long b, long c) { return a * b + b * c + c * a < a * b * c; }

/// A hyperbolic triple (a, b, c), stored sorted so that a <= b <= c.
class Triple {
 public:
  /// Sorts the entries. Throws std::invalid_argument if any entry is < 2
  /// or the triple is not hyperbolic.
  Triple(int a, int b, int c);

  /// Parses "2,3,7". Whitespace around entries is allowed.
  static Triple parse(std::string_view text);

  int a() const { return orders_[0]; }
  int b() const { return orders_[1]; }
  int c() const { return orders_[2]; }
  const std::array<int, 3>& orders() const { return orders_; }

  std::string str() const;

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<int, 3> orders_;
};

}  // namespace trisat
