#include "trisat/weil.hpp"

#include <stdexcept>
#include <string>

namespace trisat {

namespace {

void require_order(int n) {
  if (n < 2) throw std::invalid_argument("element order must be >= 2, got " + std::to_string(n));
}

int exponent_floor_sum(const DynkinType& type, int n) {
  int sum = 0;
  for (int e : exponents(type)) sum += e / n;
  return sum;
}

}  // namespace

CohomologyReport weil_h1(int dim_g, const std::array<int, 3>& fixed, WeilInvariants inv) {
  if (dim_g <= 0) throw std::invalid_argument("dim g must be positive");
  if (inv.i < 0 || inv.i_star < 0 || inv.i > dim_g || inv.i_star > dim_g) {
    throw std::invalid_argument("invariant dimensions out of range");
  }
  int sum = 0;
  for (int f : fixed) {
    if (f < 0 || f > dim_g) {
      throw std::invalid_argument("fixed dimension " + std::to_string(f) + " outside [0, " +
                                  std::to_string(dim_g) + "]");
    }
    sum += f;
  }
  CohomologyReport report;
  report.dim_g = dim_g;
  report.fixed = fixed;
  report.invariants = inv;
  report.z1 = 2 * dim_g + inv.i_star - sum;
  report.h1 = dim_g + inv.i + inv.i_star - sum;
  if (report.h1 < 0) {
    throw std::invalid_argument("inconsistent inputs: h1 = " + std::to_string(report.h1));
  }
  return report;
}

int principal_fixed_dim(const DynkinType& type, int n) {
  require_order(n);
  return type.rank() + 2 * exponent_floor_sum(type, n);
}

CohomologyReport h1_principal(const DynkinType& type, const Triple& triple) {
  std::array<int, 3> fixed{};
  for (std::size_t k = 0; k < 3; ++k) fixed[k] = principal_fixed_dim(type, triple.orders()[k]);
  return weil_h1(adjoint_dim(type), fixed);
}

int epi_dim_bound(const DynkinType& type, const Triple& triple) {
  return h1_principal(type, triple).h1;
}

LawtherDecomposition lawther_decompose(int coxeter, int n) {
  require_order(n);
  LawtherDecomposition d;
  d.alpha = coxeter / n;
  d.beta = coxeter % n;
  d.epsilon_a = n % 2;
  d.epsilon_alpha = d.alpha % 2;
  return d;
}

std::optional<int> lawther_closed_form(const DynkinType& type, int n) {
  require_order(n);
  const int r = type.rank();
  switch (type.family()) {
    case Family::A: {
      const auto d = lawther_decompose(r + 1, n);
      return d.alpha * d.alpha * n + d.beta * (2 * d.alpha + 1) - 1;
    }
    case Family::B:
    case Family::C: {
      const auto d = lawther_decompose(2 * r, n);
      const int twice = d.alpha * d.alpha * n + d.beta * (2 * d.alpha + 1);
      return twice / 2 + d.epsilon_a * ((d.alpha + 1) / 2);
    }
    case Family::D: {
      const auto d = lawther_decompose(2 * r - 2, n);
      const int twice = d.alpha * d.alpha * n + d.beta * (2 * d.alpha + 1);
      return twice / 2 + d.epsilon_a * ((d.alpha + 1) / 2) + d.alpha + 1 - d.epsilon_alpha;
    }
    default:
      return std::nullopt;
  }
}

int codim_order_variety(const DynkinType& type, int n) {
  const int from_exponents = principal_fixed_dim(type, n);
  if (const auto closed = lawther_closed_form(type, n); closed && *closed != from_exponents) {
    throw std::logic_error("codim mismatch for " + type.name() + ", n=" + std::to_string(n) +
                           ": exponents give " + std::to_string(from_exponents) +
                           ", closed form gives " + std::to_string(*closed));
  }
  return from_exponents;
}

}  // namespace trisat
