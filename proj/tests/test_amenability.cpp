#include <gtest/gtest.h>

#include "support.hpp"

using namespace goe;

TEST(Amenability, FolnerBoxes) {
  EXPECT_EQ(folner_boxes(Dihedral(6), 1).size(), 6u);
  EXPECT_EQ(folner_boxes(Dihedral(6), 50).size(), 6u);
  auto b3 = folner_boxes(Z2{}, 3);
  EXPECT_EQ(b3.size(), 9u);
  EXPECT_TRUE(b3.contains({-1, -1}));
  EXPECT_TRUE(b3.contains({1, 1}));
  auto z = folner_boxes(Z1{}, 7);
  ASSERT_EQ(z.size(), 7u);
  EXPECT_EQ(z[0], (Z1::cell_type{0}));
  EXPECT_EQ(z[6], (Z1::cell_type{6}));
  EXPECT_EQ(folner_boxes(Z3{}, 4).size(), 64u);
  EXPECT_THROW(folner_boxes(Z1{}, 0), std::invalid_argument);
}

TEST(Amenability, DefectExamples) {
  Z1 z;
  EXPECT_EQ(folner_defect(z, folner_boxes(z, 9), trivial_coset(z)), Rational(0));
  for (std::int64_t n = 1; n <= 40; ++n)
    EXPECT_EQ(folner_defect(z, folner_boxes(z, n), iota(z, Z1::cell_type{1})), Rational(1, n));
  Z2 z2;
  for (std::int64_t n = 2; n <= 20; ++n)
    EXPECT_EQ(folner_defect(z2, folner_boxes(z2, n), iota(z2, Z2::cell_type{1, 0})), Rational(n, n * n));
}

TEST(Amenability, BoundaryRatioExamples) {
  Z2 z2;
  auto moore = moore_neighbourhood(z2);
  EXPECT_EQ(boundary_ratio(z2, folner_boxes(z2, 10), CosetSet<Z2>{trivial_coset(z2)}), Rational(0));
  EXPECT_EQ(boundary_ratio(z2, folner_boxes(z2, 10), moore), Rational(80, 100));
  EXPECT_EQ(boundary_ratio(z2, folner_boxes(z2, 100), moore), Rational(8, 100));
  EXPECT_DOUBLE_EQ(to_double(boundary_ratio(z2, folner_boxes(z2, 100), moore)), 0.08);
}

TEST(Amenability, FiniteSpacesHaveZeroRatios) {
  Dihedral d5(5);
  auto N = moore_neighbourhood(d5);
  for (std::int64_t i = 1; i <= 6; ++i) {
    EXPECT_EQ(boundary_ratio(d5, folner_boxes(d5, i), N), Rational(0));
    EXPECT_EQ(folner_defect(d5, folner_boxes(d5, i), iota(d5, 2)), Rational(0));
  }
}

// F ∖ (-⇀e)⁻¹(F) ⊆ ∂_{G0,e} F, so every defect is bounded by a boundary ratio.
TEST(Amenability, DefectBoundedByBoundaryRatio) {
  goe::testing::Rng rng(9);
  P4m p4m;
  for (int k = 0; k < 40; ++k) {
    auto e = goe::testing::random_coset(p4m, rng, 3);
    auto F = folner_boxes(p4m, 1 + k % 9);
    CosetSet<P4m> E{trivial_coset(p4m), e};
    auto escaped = set_difference(F, semi_preimage(p4m, F, e));
    EXPECT_TRUE(boundary(p4m, F, E).includes(escaped));
    EXPECT_LE(folner_defect(p4m, F, e), boundary_ratio(p4m, F, E));
  }
}

TEST(Amenability, RegionOverloads) {
  Z2 z2;
  auto F = folner_boxes(z2, 6);
  auto region = folner_boxes(z2, 10);
  EXPECT_EQ(boundary_ratio(z2, F, moore_neighbourhood(z2), region), Rational(48, 36));
  EXPECT_THROW(boundary_ratio(z2, F, moore_neighbourhood(z2), F), RegionOverflow);
  EXPECT_EQ(folner_defect(z2, F, iota(z2, Z2::cell_type{0, 1}), region), Rational(1, 6));
  EXPECT_THROW(folner_defect(z2, CellSet<Z2>{}, trivial_coset(z2)), PreconditionViolation);
}
