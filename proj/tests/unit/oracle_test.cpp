#include <random>

#include <gtest/gtest.h>

#include "rank_oracle.hpp"
#include "trisat/altmethod.hpp"
#include "trisat/bibi.hpp"
#include "trisat/eigenvalues.hpp"
#include "trisat/permutation.hpp"
#include "trisat/weil.hpp"

using namespace trisat;

namespace {

std::vector<std::pair<int, int>> as_pairs(const EigenvalueMultiset& ev) {
  return {ev.multiplicities().begin(), ev.multiplicities().end()};
}

}  // namespace

TEST(RankOracle, SanityOnKnownMatrices) {
  EXPECT_EQ(oracle::fixed_dim(oracle::wedge_square(oracle::Matrix::Identity(6, 6))), 15);
  oracle::Matrix d = oracle::Matrix::Identity(14, 14);
  for (int i = 6; i < 14; ++i) d(i, i) = -1.0;
  EXPECT_EQ(oracle::fixed_dim(oracle::wedge_square(d)), 43);
  // Sym^d of an order-2n element of SL2 has order 2n.
  const auto g = oracle::sym_power_of_rotation(4, 5);
  oracle::Matrix p = oracle::Matrix::Identity(5, 5);
  for (int i = 0; i < 10; ++i) p = p * g;
  EXPECT_TRUE(p.isApprox(oracle::Matrix::Identity(5, 5), 1e-9));
}

TEST(RankOracle, PrincipalFixedDimClassical) {
  for (int n = 2; n <= 16; ++n) {
    for (int r = 1; r <= 6; ++r) {
      EXPECT_EQ(principal_fixed_dim(DynkinType(Family::A, r), n), oracle::principal_fixed_dim('A', r, n)) << r << n;
      if (r >= 2) {
        EXPECT_EQ(principal_fixed_dim(DynkinType(Family::B, r), n), oracle::principal_fixed_dim('B', r, n));
        EXPECT_EQ(principal_fixed_dim(DynkinType(Family::C, r), n), oracle::principal_fixed_dim('C', r, n));
      }
      if (r >= 4) EXPECT_EQ(principal_fixed_dim(DynkinType(Family::D, r), n), oracle::principal_fixed_dim('D', r, n));
    }
  }
}

TEST(RankOracle, SoFixedDimRandom) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int modulus = 1 + static_cast<int>(rng() % 12);
    EigenvalueMultiset ev(modulus);
    const int blocks = 1 + static_cast<int>(rng() % 7);
    for (int b = 0; b < blocks; ++b) {
      const int r = static_cast<int>(rng() % static_cast<unsigned>(modulus));
      const int k = 1 + static_cast<int>(rng() % 3);
      ev.add(r, k);
      if ((2 * r) % modulus != 0) ev.add(modulus - r, k);
    }
    const auto g = oracle::rotation_blocks(modulus, as_pairs(ev));
    EXPECT_EQ(so_fixed_dim(ev), oracle::fixed_dim(oracle::wedge_square(g)));
  }
}

TEST(RankOracle, BibiFromSymPowers) {
  for (int r = 4; r <= 9; ++r) {
    for (int k = 1; k < r - k - 1; ++k) {
      for (const Triple t : {Triple(2, 3, 7), Triple(2, 4, 5), Triple(3, 3, 4), Triple(2, 5, 6)}) {
        const auto report = h1_bibi(BibiConfig(r, k), t);
        for (std::size_t i = 0; i < 3; ++i) {
          const int n = t.orders()[i];
          const auto g = oracle::block_diagonal(oracle::sym_power_of_rotation(2 * k, n),
                                                oracle::sym_power_of_rotation(2 * (r - k - 1), n));
          EXPECT_EQ(report.fixed[i], oracle::fixed_dim(oracle::wedge_square(g))) << r << ' ' << k << t.str();
        }
      }
    }
  }
}

TEST(RankOracle, D7Example) {
  const int expected[3] = {43, 31, 13};
  const int orders[3] = {2, 3, 7};
  for (int i = 0; i < 3; ++i) {
    const auto g = oracle::block_diagonal(oracle::sym_power_of_rotation(2, orders[i]),
                                          oracle::sym_power_of_rotation(10, orders[i]));
    EXPECT_EQ(oracle::fixed_dim(oracle::wedge_square(g)), expected[i]);
  }
}

TEST(RankOracle, AltFixedDimsRandom) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 7 + static_cast<int>(rng() % 14);
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    const int numeric = oracle::fixed_dim(oracle::wedge_square(oracle::standard_module(img)));
    EXPECT_EQ(so_fixed_dim(perm_eigenvalues_on_standard(p.cycle_type())), numeric) << p.str();
  }
}
