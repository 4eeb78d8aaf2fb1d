#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace trisat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline constexpr int kMaxRank = 512;

/// An irreducible Dynkin type such as A5, D7 or E8.
///
/// Construction validates the rank against the family: A_r needs r >= 1,
/// B_r and C_r need r >= 2, D_r needs r >= 4, E needs 6, 7 or 8, F only 4
/// and G only 2. Ranks above kMaxRank are rejected. Invalid input throws
/// std::invalid_argument.
class DynkinType {
 public:
  DynkinType(Family family, int rank);

  /// Parses "D7", "e8", "A12". Throws std::invalid_argument.
  static DynkinType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const;
  std::string name() const;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

struct RootSystemData {
  std::vector<int> exponents;  // ascending, with multiplicity
  int dim = 0;                 // dimension of the adjoint group
  int coxeter = 0;
};

/// Exponents e_1 <= ... <= e_r. D_r with r even carries r-1 twice.
std::vector<int> exponents(const DynkinType& type);

/// dim = sum over exponents of (2e + 1).
int adjoint_dim(const DynkinType& type);

/// h = largest exponent + 1.
int coxeter_number(const DynkinType& type);

/// |Phi| = 2 * sum of exponents.
int root_count(const DynkinType& type);

RootSystemData root_system_data(const DynkinType& type);

}  // namespace trisat
