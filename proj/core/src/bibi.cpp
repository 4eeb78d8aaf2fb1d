#include "trisat/bibi.hpp"

#include <stdexcept>
#include <string>

namespace trisat {

BibiConfig::BibiConfig(int r, int k) : r_(r), k_(k) {
  if (r < 4) throw std::invalid_argument("B_k x B_{r-k-1} < D_r needs r >= 4");
  if (k < 1 || k > r - 2) throw std::invalid_argument("k must lie in [1, r-2]");
  if (r == 2 * k + 1) throw std::invalid_argument("r = 2k+1 gives isomorphic factors");
  if (k > r - k - 1) k_ = r - k - 1;
}

EigenvalueMultiset principal_block_eigenvalues(int rank, int n) {
  if (rank < 1) throw std::invalid_argument("block rank must be >= 1");
  if (n < 2) throw std::invalid_argument("element order must be >= 2");
  EigenvalueMultiset ev(2 * n);
  for (int j = -rank; j <= rank; ++j) ev.add(2 * j);
  return ev;
}

CohomologyReport h1_bibi(const BibiConfig& cfg, const Triple& triple) {
  std::array<int, 3> fixed{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int n = triple.orders()[i];
    const auto ev = principal_block_eigenvalues(cfg.small_rank(), n)
                        .merged(principal_block_eigenvalues(cfg.large_rank(), n));
    fixed[i] = so_fixed_dim(ev);
  }
  return weil_h1(cfg.r() * (2 * cfg.r() - 1), fixed);
}

int bibi_factor_h1(int rank, const Triple& triple) {
  if (rank == 1) return 0;
  return h1_principal(DynkinType(Family::B, rank), triple).h1;
}

Verdict bibi_criterion(const BibiConfig& cfg, const Triple& triple) {
  Verdict verdict;
  verdict.method = "bibi";
  auto& cert = verdict.certificate;
  cert["type"] = DynkinType(Family::D, cfg.r()).name();
  cert["triple"] = triple.orders();
  cert["k"] = cfg.k();
  cert["factors"] = {"B" + std::to_string(cfg.small_rank()), "B" + std::to_string(cfg.large_rank())};

  const int lo = cfg.small_rank();
  const int hi = cfg.large_rank();
  auto has_rank = [&](int x) { return lo == x || hi == x; };
  if (triple.b() == 3 && (has_rank(2) || has_rank(3))) {
    cert["reason"] = "b=3 requires ranks 2 and 3 absent from the factors";
    return verdict;
  }
  if (triple.a() == 2 && triple.c() == 5 && has_rank(3)) {
    cert["reason"] = "(a,c)=(2,5) requires rank 3 absent from the factors";
    return verdict;
  }

  const int lhs_small = bibi_factor_h1(lo, triple);
  const int lhs_large = bibi_factor_h1(hi, triple);
  const auto rhs = h1_bibi(cfg, triple);
  cert["lhs"] = {{"h1_small", lhs_small}, {"h1_large", lhs_large}, {"sum", lhs_small + lhs_large}};
  cert["rhs"] = {{"dim_g", rhs.dim_g}, {"fixed", rhs.fixed}, {"h1", rhs.h1}};
  if (lhs_small + lhs_large < rhs.h1) {
    verdict.status = Status::Saturated;
  } else {
    cert["reason"] = "inequality fails";
  }
  return verdict;
}

Verdict search_bibi(int r, const Triple& triple) {
  if (r < 4) throw std::invalid_argument("search_bibi needs r >= 4");
  Verdict unknown;
  unknown.method = "bibi";
  unknown.certificate["type"] = DynkinType(Family::D, r).name();
  unknown.certificate["triple"] = triple.orders();
  auto& attempts = unknown.certificate["attempts"] = nlohmann::json::array();
  for (int k = 1; k < r - k - 1; ++k) {
    Verdict v = bibi_criterion(BibiConfig(r, k), triple);
    if (v.saturated()) return v;
    attempts.push_back(v.certificate);
  }
  if (attempts.empty()) unknown.certificate["reason"] = "no admissible k";
  return unknown;
}

}  // namespace trisat
