#include <numeric>

#include <gtest/gtest.h>

#include "trisat/rootsys.hpp"

using namespace trisat;

TEST(Exponents, KnownLists) {
  EXPECT_EQ(exponents(DynkinType(Family::E, 8)), (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(exponents(DynkinType(Family::A, 1)), (std::vector<int>{1}));
  EXPECT_EQ(exponents(DynkinType(Family::D, 4)), (std::vector<int>{1, 3, 3, 5}));
  EXPECT_EQ(exponents(DynkinType(Family::E, 6)), (std::vector<int>{1, 4, 5, 7, 8, 11}));
  EXPECT_EQ(exponents(DynkinType(Family::E, 7)), (std::vector<int>{1, 5, 7, 9, 11, 13, 17}));
  EXPECT_EQ(exponents(DynkinType(Family::F, 4)), (std::vector<int>{1, 5, 7, 11}));
  EXPECT_EQ(exponents(DynkinType(Family::G, 2)), (std::vector<int>{1, 5}));
  EXPECT_EQ(exponents(DynkinType(Family::C, 3)), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(exponents(DynkinType(Family::D, 5)), (std::vector<int>{1, 3, 4, 5, 7}));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(adjoint_dim(DynkinType(Family::G, 2)), 14);
  EXPECT_EQ(adjoint_dim(DynkinType(Family::E, 8)), 248);
  EXPECT_EQ(adjoint_dim(DynkinType(Family::D, 7)), 91);
  EXPECT_EQ(adjoint_dim(DynkinType(Family::E, 6)), 78);
  EXPECT_EQ(adjoint_dim(DynkinType(Family::E, 7)), 133);
  EXPECT_EQ(adjoint_dim(DynkinType(Family::F, 4)), 52);
}

TEST(Dimension, ClassicalFamiliesMatchMatrixGroups) {
  for (int r = 1; r <= 40; ++r) {
    EXPECT_EQ(adjoint_dim(DynkinType(Family::A, r)), r * (r + 2));
    if (r >= 2) {
      EXPECT_EQ(adjoint_dim(DynkinType(Family::B, r)), r * (2 * r + 1));
      EXPECT_EQ(adjoint_dim(DynkinType(Family::C, r)), r * (2 * r + 1));
    }
    if (r >= 4) EXPECT_EQ(adjoint_dim(DynkinType(Family::D, r)), r * (2 * r - 1));
  }
}

TEST(Coxeter, Examples) {
  for (int r = 1; r <= 30; ++r) EXPECT_EQ(coxeter_number(DynkinType(Family::A, r)), r + 1);
  for (int r = 4; r <= 30; ++r) EXPECT_EQ(coxeter_number(DynkinType(Family::D, r)), 2 * r - 2);
  for (int r = 2; r <= 30; ++r) EXPECT_EQ(coxeter_number(DynkinType(Family::B, r)), 2 * r);
  EXPECT_EQ(coxeter_number(DynkinType(Family::E, 8)), 30);
  EXPECT_EQ(coxeter_number(DynkinType(Family::E, 6)), 12);
  EXPECT_EQ(coxeter_number(DynkinType(Family::G, 2)), 6);
}

std::vector<DynkinType> sample_types() {
  std::vector<DynkinType> out;
  for (int r = 1; r <= 25; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= 25; ++r) {
    out.emplace_back(Family::B, r);
    out.emplace_back(Family::C, r);
  }
  for (int r = 4; r <= 25; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(Family::E, r);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

TEST(RootSystemProperties, CountsAreConsistent) {
  for (const auto& t : sample_types()) {
    const auto e = exponents(t);
    ASSERT_EQ(static_cast<int>(e.size()), t.rank()) << t.name();
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end())) << t.name();
    EXPECT_EQ(e.front(), 1) << t.name();
    // |Phi| = r h and dim = r + |Phi|.
    EXPECT_EQ(root_count(t), t.rank() * coxeter_number(t)) << t.name();
    EXPECT_EQ(adjoint_dim(t), t.rank() + root_count(t)) << t.name();
    // Exponents are symmetric: e_i + e_{r+1-i} = h.
    for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e[i] + e[e.size() - 1 - i], coxeter_number(t)) << t.name();
    const auto data = root_system_data(t);
    EXPECT_EQ(data.exponents, e);
    EXPECT_EQ(data.dim, adjoint_dim(t));
  }
}

TEST(DynkinTypeParse, RoundTrip) {
  for (const auto& t : sample_types()) EXPECT_EQ(DynkinType::parse(t.name()), t);
  EXPECT_EQ(DynkinType::parse("e8"), DynkinType(Family::E, 8));
}

TEST(DynkinTypeParse, RejectsInvalid) {
  for (const char* bad : {"", "D3", "B1", "C1", "E5", "E9", "F3", "G3", "A0", "X2", "D", "D7x", "A-1"}) {
    EXPECT_THROW(DynkinType::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(DynkinType(Family::A, kMaxRank + 1), std::invalid_argument);
}
