#include <gtest/gtest.h>

#include <random>

#include "ydh/error.hpp"
#include "ydh/exactla.hpp"

using namespace ydh;

namespace {

Mat random_mat(std::mt19937& rng, int r, int c, int order, int zero_bias = 0) {
  Mat m(r, c, order);
  const int phi = euler_phi(order);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (zero_bias && static_cast<int>(rng() % 10) < zero_bias) continue;
      std::vector<Rational> q(phi);
      for (auto& x : q) {
        x = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
        x.canonicalize();
      }
      m(i, j) = CycNum(order, q);
    }
  return m;
}

}  // namespace

TEST(ExactLA, KernelSolveInverse) {
  std::mt19937 rng(3);
  for (int order : {1, 4, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      Mat a = random_mat(rng, 4, 6, order, 3);
      Mat k = kernel(a);
      EXPECT_EQ(k.cols() + rank(a), 6);
      EXPECT_TRUE((a * k).is_zero());
      Mat x0 = random_mat(rng, 6, 2, order);
      Mat x = solve(a, a * x0);
      EXPECT_EQ(a * x, a * x0);
      Mat sq = random_mat(rng, 4, 4, order);
      if (rank(sq) == 4) {
        EXPECT_TRUE((sq * inverse(sq)).is_identity());
        EXPECT_EQ(det(sq) * det(inverse(sq)), CycNum(order, 1));
      }
    }
  }
  Mat sing(2, 2, 1);
  sing(0, 0) = CycNum(1, 1);
  EXPECT_THROW(inverse(sing), DivisionByZero);
  Mat rhs(2, 1, 1);
  rhs(1, 0) = CycNum(1, 1);
  EXPECT_THROW(solve(sing, rhs), NotInSpan);
}

TEST(ExactLA, CharpolyMatchesDeterminant) {
  // det(c I - M) evaluated independently by elimination
  std::mt19937 rng(5);
  for (int order : {1, 8}) {
    for (int n : {1, 2, 3, 5}) {
      Mat m = random_mat(rng, n, n, order, 4);
      CycPoly p = charpoly(m);
      EXPECT_EQ(p.degree(), n);
      for (long c : {-2L, 0L, 1L, 3L}) {
        CycNum cc(order, c);
        EXPECT_EQ(p.eval(cc), det(cc * Mat::identity(n, order) - m));
      }
    }
  }
}

TEST(ExactLA, KronAndFlip) {
  std::mt19937 rng(9);
  Mat a = random_mat(rng, 2, 2, 1), b = random_mat(rng, 3, 3, 1);
  // flip intertwines a (x) b with b (x) a
  EXPECT_EQ(flip(2, 3, 1) * kron(a, b), kron(b, a) * flip(2, 3, 1));
  EXPECT_TRUE((flip(3, 2, 1) * flip(2, 3, 1)).is_identity());
}

TEST(ExactLA, MonomialFastPathAgreesWithCharpoly) {
  // 3-cycle scaled by i: eigenvalues are cube roots of i^3 = -i
  const int ord = 12;
  Mat m(3, 3, ord);
  m(1, 0) = CycNum::zeta(12, 3);
  m(2, 1) = CycNum::zeta(12, 3);
  m(0, 2) = CycNum::zeta(12, 3);
  auto fast = monomial_eigenvalues(m);
  ASSERT_TRUE(fast.has_value());
  auto slow = roots_in_field(charpoly(m), ord);
  ASSERT_EQ(fast->size(), slow.size());
  for (size_t i = 0; i < slow.size(); ++i) {
    EXPECT_EQ((*fast)[i].value, slow[i].value);
    EXPECT_EQ((*fast)[i].multiplicity, slow[i].multiplicity);
  }
  // a 4-cycle over Q has eigenvalues +-i outside the field
  EXPECT_THROW(monomial_eigenvalues(Mat::permutation({1, 2, 3, 0}, 1)), NonSplitField);
}

TEST(ExactLA, SplitInvariantJointEigenspaces) {
  // Z/2 x Z/2 acting on K^4 by the regular representation
  const int ord = 1;
  Mat a = Mat::permutation({1, 0, 3, 2}, ord);
  Mat b = Mat::permutation({2, 3, 0, 1}, ord);
  auto blocks = split_invariant(Mat::identity(4, ord), {a, b});
  ASSERT_EQ(blocks.size(), 4u);
  for (const auto& blk : blocks) {
    EXPECT_EQ(blk.basis.cols(), 1);
    EXPECT_EQ(a.apply(blk.basis.col(0)), blk.values[0] * blk.basis.col(0));
    EXPECT_EQ(b.apply(blk.basis.col(0)), blk.values[1] * blk.basis.col(0));
  }
  // rotation by 90 degrees does not split over Q but does over Q(i)
  Mat rot(2, 2, 1);
  rot(0, 1) = CycNum(1, -1);
  rot(1, 0) = CycNum(1, 1);
  EXPECT_THROW(split_invariant(Mat::identity(2, 1), {rot}), NonSplitField);
  Mat rot4(2, 2, 4);
  rot4(0, 1) = CycNum(4, -1);
  rot4(1, 0) = CycNum(4, 1);
  Mat basis = Mat::identity(2, 4);
  EXPECT_EQ(split_invariant(basis, {rot4}).size(), 2u);
  // a Jordan block yields one generalized eigenspace
  Mat j(2, 2, 1);
  j(0, 0) = j(1, 1) = j(0, 1) = CycNum(1, 1);
  auto jb = split_invariant(Mat::identity(2, 1), {j});
  ASSERT_EQ(jb.size(), 1u);
  EXPECT_EQ(jb[0].basis.cols(), 2);
}
