#pragma once

#include <array>
#include <optional>

#include "trisat/rootsys.hpp"
#include "trisat/triple.hpp"

namespace trisat {

/// Dimensions of the invariants of Ad∘rho on g and of its dual on g*.
struct WeilInvariants {
  int i = 0;
  int i_star = 0;
};

/// Z^1 and H^1 dimensions of a triangle group acting on a Lie algebra,
/// computed from the fixed-space dimensions of the three generators.
struct CohomologyReport {
  int dim_g = 0;
  std::array<int, 3> fixed{};
  int z1 = 0;
  int h1 = 0;
  WeilInvariants invariants;
};

/// z1 = 2 dim g + i* - sum(fixed), h1 = dim g + i + i* - sum(fixed).
/// Throws std::invalid_argument if a fixed dimension lies outside
/// [0, dim_g] or the resulting h1 is negative.
CohomologyReport weil_h1(int dim_g, const std::array<int, 3>& fixed, WeilInvariants inv = {});

/// dim g^t for an element of order n in the image of the principal
/// PGL2: sum over exponents of (1 + 2 floor(e_j / n)).
int principal_fixed_dim(const DynkinType& type, int n);

/// H^1 of T_{a,b,c} acting through the principal homomorphism. The
/// invariants vanish, so h1 = dim G - sum of the three fixed dimensions.
CohomologyReport h1_principal(const DynkinType& type, const Triple& triple);

/// Upper bound on dim Epi(T, G) - dim G; equals h1_principal(...).h1.
int epi_dim_bound(const DynkinType& type, const Triple& triple);

/// h = alpha * n + beta with 0 <= beta < n, plus the parity flags used in
/// the classical closed forms for codim G_[n].
struct LawtherDecomposition {
  int alpha = 0;
  int beta = 0;
  int epsilon_a = 0;      // 1 iff n is odd
  int epsilon_alpha = 0;  // 1 iff alpha is odd
};

LawtherDecomposition lawther_decompose(int coxeter, int n);

/// Closed form for codim G_[n] (elements of order dividing n) in a
/// classical group; std::nullopt for exceptional types.
std::optional<int> lawther_closed_form(const DynkinType& type, int n);

/// codim G_[n] = r + 2 sum floor(e_j / n). For classical types the closed
/// form is evaluated as well and must agree; a disagreement throws
/// std::logic_error.
int codim_order_variety(const DynkinType& type, int n);

}  // namespace trisat
