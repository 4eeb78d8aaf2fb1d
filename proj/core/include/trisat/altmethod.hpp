#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trisat/cycle_type.hpp"
#include "trisat/eigenvalues.hpp"
#include "trisat/generation.hpp"
#include "trisat/rootsys.hpp"
#include "trisat/triple.hpp"
#include "trisat/verdict.hpp"
#include "trisat/weil.hpp"

namespace trisat {

/// Alt_m acting on so_{m-1} = Λ²W through its standard module W.
/// m = 2r+2 targets B_r, m = 2r+1 targets D_r; m = 7 targets A3 (= D3).
class AltConfig {
 public:
  /// Throws std::invalid_argument for m < 7.
  explicit AltConfig(int m);

  int m() const { return m_; }
  const DynkinType& target() const { return target_; }
  /// dim so_{m-1}.
  int lie_dim() const { return (m_ - 1) * (m_ - 2) / 2; }

  /// The m whose Alt_m-method targets `type`, if any (B_r with r >= 3,
  /// D_r with r >= 4).
  static std::optional<int> degree_for(const DynkinType& type);

 private:
  int m_;
  DynkinType target_;
};

/// Eigenvalues on the (m-1)-dimensional standard module of a permutation
/// with the given cycle type, over the lcm of its cycle lengths.
EigenvalueMultiset perm_eigenvalues_on_standard(const CycleType& type);

/// H^1 of T acting on Λ²W via an Alt_m quotient whose generators have the
/// given cycle shapes. Shape i must have degree m and order equal to the
/// i-th entry of the triple; otherwise std::invalid_argument.
CohomologyReport h1_alt(int m, const std::array<CycleType, 3>& shapes, const Triple& triple);

/// A row of the built-in table of generating pairs.
struct AltGeneratingRow {
  int m;
  std::array<int, 3> triple;
  std::array<const char*, 3> shapes;
};

const std::vector<AltGeneratingRow>& alt_generating_rows();

/// Built-in shape hint for (m, triple), if that pair is a table row.
std::optional<std::array<CycleType, 3>> alt_shape_hint(int m, const Triple& triple);

/// Finds an epimorphism T -> Alt_m (using the built-in shapes when the
/// pair is a table row) and checks h1_alt > 0 on the witness's shapes.
Verdict alt_saturation_check(int m, const Triple& triple);

}  // namespace trisat
