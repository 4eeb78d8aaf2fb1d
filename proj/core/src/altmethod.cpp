#include "trisat/altmethod.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace trisat {

namespace {

DynkinType target_for(int m) {
  if (m < 7) throw std::invalid_argument("the alternating method needs m >= 7");
  if (m == 7) return DynkinType(Family::A, 3);
  if (m % 2 == 0) return DynkinType(Family::B, (m - 2) / 2);
  return DynkinType(Family::D, (m - 1) / 2);
}

}  // namespace

AltConfig::AltConfig(int m) : m_(m), target_(target_for(m)) {}

std::optional<int> AltConfig::degree_for(const DynkinType& type) {
  if (type.family() == Family::B && type.rank() >= 3) return 2 * type.rank() + 2;
  if (type.family() == Family::D) return 2 * type.rank() + 1;
  return std::nullopt;
}

EigenvalueMultiset perm_eigenvalues_on_standard(const CycleType& type) {
  std::map<int, int> counts;
  for (int b : type.parts()) ++counts[b];
  int modulus = 1;
  for (const auto& [b, n] : counts) modulus = std::lcm(modulus, b);
  EigenvalueMultiset ev(modulus);
  // Each b-cycle contributes every b-th root of unity once on C^m; the
  // trivial summand removes one copy of eigenvalue 1.
  for (const auto& [b, n] : counts) {
    const int step = modulus / b;
    for (int j = 0; j < b; ++j) ev.add(j * step, n);
  }
  ev.add(0, -1);
  return ev;
}

CohomologyReport h1_alt(int m, const std::array<CycleType, 3>& shapes, const Triple& triple) {
  const AltConfig cfg(m);
  std::array<int, 3> fixed{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& shape = shapes[i];
    if (shape.degree() != m) {
      throw std::invalid_argument("shape " + shape.str() + " is not of degree " + std::to_string(m));
    }
    if (shape.order() != static_cast<std::uint64_t>(triple.orders()[i])) {
      throw std::invalid_argument("shape " + shape.str() + " has order " + std::to_string(shape.order()) +
                                  ", expected " + std::to_string(triple.orders()[i]));
    }
    fixed[i] = so_fixed_dim(perm_eigenvalues_on_standard(shape));
  }
  return weil_h1(cfg.lie_dim(), fixed);
}

const std::vector<AltGeneratingRow>& alt_generating_rows() {
  static const std::vector<AltGeneratingRow> rows = {
      {8, {3, 3, 15}, {"(3)^2(1)^2", "(3)^2(1)^2", "(5)(3)"}},
      {9, {2, 3, 15}, {"(2)^4(1)^1", "(3)^3", "(5)^1(3)^1(1)^1"}},
      {9, {3, 3, 7}, {"(3)^3", "(3)^3", "(7)^1(1)^2"}},
      {9, {3, 3, 9}, {"(3)^3", "(3)^2(1)^3", "(9)^1"}},
      {9, {3, 3, 10}, {"(3)^3", "(3)^3", "(5)^1(2)^2"}},
      {9, {3, 3, 12}, {"(3)^3", "(3)^2(1)^3", "(4)^1(3)^1(2)^1"}},
      {9, {3, 3, 15}, {"(3)^3", "(3)^3", "(5)^1(3)^1(1)^1"}},
      {11, {2, 3, 11}, {"(2)^4(1)^3", "(3)^3(1)^2", "(11)^1"}},
  };
  return rows;
}

std::optional<std::array<CycleType, 3>> alt_shape_hint(int m, const Triple& triple) {
  for (const auto& row : alt_generating_rows()) {
    if (row.m == m && row.triple == triple.orders()) {
      return std::array<CycleType, 3>{CycleType::parse(row.shapes[0], m), CycleType::parse(row.shapes[1], m),
                                      CycleType::parse(row.shapes[2], m)};
    }
  }
  return std::nullopt;
}

Verdict alt_saturation_check(int m, const Triple& triple) {
  const AltConfig cfg(m);
  Verdict verdict;
  verdict.method = "alt";
  auto& cert = verdict.certificate;
  cert["m"] = m;
  cert["type"] = cfg.target().name();
  cert["triple"] = triple.orders();

  GenerationSearchOptions options;
  options.shape_hint = alt_shape_hint(m, triple);
  cert["used_table_shapes"] = options.shape_hint.has_value();
  auto search = find_generating_triple(m, triple, options);
  if (!search.witness) {
    cert["reason"] = search.reason;
    return verdict;
  }
  const auto& w = *search.witness;
  const auto report = h1_alt(m, w.shapes, triple);
  cert["witness"] = {{"A", std::vector<int>(w.a.images().begin(), w.a.images().end())},
                     {"B", std::vector<int>(w.b.images().begin(), w.b.images().end())},
                     {"shapes", {w.shapes[0].str(), w.shapes[1].str(), w.shapes[2].str()}}};
  cert["h1"] = {{"dim_g", report.dim_g}, {"fixed", report.fixed}, {"h1", report.h1}};
  if (report.h1 > 0) {
    verdict.status = Status::Saturated;
  } else {
    cert["reason"] = "h1 vanishes";
  }
  return verdict;
}

}  // namespace trisat
