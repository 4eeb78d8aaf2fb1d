#pragma once

#include "trisat/eigenvalues.hpp"
#include "trisat/triple.hpp"
#include "trisat/verdict.hpp"
#include "trisat/weil.hpp"

namespace trisat {

/// The subgroup SO(2k+1) x SO(2r-2k-1) of PSO(2r), i.e. B_k x B_{r-k-1}
/// inside D_r. Normalized so that k < r - k - 1; a larger k is swapped for
/// the complementary rank. Throws std::invalid_argument when r < 4, k < 1
/// or r = 2k + 1.
class BibiConfig {
 public:
  BibiConfig(int r, int k);

  int r() const { return r_; }
  int k() const { return k_; }
  int small_rank() const { return k_; }
  int large_rank() const { return r_ - k_ - 1; }

 private:
  int r_;
  int k_;
};

/// Eigenvalues of an order-n element under the principal PGL2 -> SO(2 rank + 1):
/// residues 2j mod 2n for j = -rank..rank.
EigenvalueMultiset principal_block_eigenvalues(int rank, int n);

/// H^1 of T on so_{2r} through the block-diagonal principal embedding.
CohomologyReport h1_bibi(const BibiConfig& cfg, const Triple& triple);

/// H^1 carried by a single factor B_rank; B_1 (PGL2 itself) contributes 0.
int bibi_factor_h1(int rank, const Triple& triple);

/// Saturated iff h1(B_k) + h1(B_{r-k-1}) < h1_bibi and the side
/// conditions hold (b = 3 excludes ranks 2 and 3; (a,c) = (2,5) excludes
/// rank 3). Side-condition failures come back as Unknown with a reason.
Verdict bibi_criterion(const BibiConfig& cfg, const Triple& triple);

/// Tries k = 1, 2, ... while k < r - k - 1 and returns the first
/// Saturated verdict, or Unknown with the per-k reasons.
Verdict search_bibi(int r, const Triple& triple);

}  // namespace trisat
