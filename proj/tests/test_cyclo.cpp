#include <gtest/gtest.h>

#include <random>

#include "ydh/cyclo.hpp"
#include "ydh/error.hpp"
#include "ydh/poly.hpp"

using namespace ydh;

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), (std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  for (int n = 1; n < 40; ++n) EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
}

TEST(Cyclo, ZetaPowersReduce) {
  CycNum z = CycNum::zeta(8);
  EXPECT_EQ(z.pow(4), CycNum(8, -1));
  EXPECT_EQ(z.pow(8), CycNum(8, 1));
  // 1 + z + z^2 = 0 in Q(zeta_3)
  CycNum w = CycNum::zeta(3);
  EXPECT_TRUE((CycNum(3, 1) + w + w * w).is_zero());
  EXPECT_EQ(CycNum::zeta(2), CycNum(2, -1));
  EXPECT_EQ(CycNum::zeta(1), CycNum(1, 1));
}

TEST(Cyclo, EmbedSquaresIntoLargerField) {
  // zeta_4 maps to zeta_8^2
  EXPECT_EQ(embed(4, 8, CycNum::zeta(4)), CycNum::zeta(8).pow(2));
  EXPECT_THROW(embed(4, 6, CycNum::zeta(4)), NonDivisibleOrders);
  // mixed orders meet in the lcm field: zeta_4 * zeta_3 = zeta_12^(3+4)
  EXPECT_EQ(CycNum::zeta(4) * CycNum::zeta(3), CycNum::zeta(12, 7));
}

TEST(Cyclo, InverseAndNorm) {
  std::mt19937 rng(7);
  for (int order : {3, 5, 8, 12, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> c(euler_phi(order));
      for (auto& q : c) q = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
      CycNum x(order, c);
      if (x.is_zero()) continue;
      EXPECT_TRUE((x * x.inverse()).is_one());
      EXPECT_EQ((x * x).norm(), x.norm() * x.norm());
    }
  }
  // N(1 + i) = 2, N(zeta_5) = 1
  EXPECT_EQ((CycNum(4, 1) + CycNum::zeta(4)).norm(), 2);
  EXPECT_EQ(CycNum::zeta(5).norm(), 1);
  EXPECT_THROW(CycNum(5).inverse(), DivisionByZero);
}

TEST(Cyclo, ParseRenderRoundTrip) {
  CycNum x = CycNum::parse("1/2 - 1/2*z^3", 8);
  EXPECT_EQ(x.str(), "1/2 - 1/2*z^3");
  EXPECT_EQ(CycNum::parse("2/4*z - 3", 8).str(), "-3 + 1/2*z");
  EXPECT_EQ(CycNum::parse("z^4", 8).str(), "-1");
  EXPECT_EQ(CycNum::parse("0", 5).str(), "0");
  EXPECT_EQ(CycNum::parse("-z^2 + z", 12).str(), "z - z^2");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c(4);
    for (auto& q : c) q = Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1);
    CycNum v(12, c);
    EXPECT_EQ(CycNum::parse(v.str(), 12), v);
  }
  EXPECT_THROW(CycNum::parse("1/0", 4), ParseError);
  EXPECT_THROW(CycNum::parse("1 2", 4), ParseError);
  EXPECT_THROW(CycNum::parse("", 4), ParseError);
  EXPECT_THROW(CycNum::parse("2*y", 4), ParseError);
}

TEST(Cyclo, RootOfUnityLookup) {
  // Q(zeta_3) contains the 6th roots of unity: zeta_6 = -zeta_3^2
  EXPECT_EQ(root_of_unity(6, 1, 3), -CycNum::zeta(3, 2));
  EXPECT_THROW(root_of_unity(4, 1, 3), NonDivisibleOrders);
  for (int k = 0; k < 12; ++k) EXPECT_EQ(root_of_unity_log(CycNum::zeta(12, k)), k);
  EXPECT_EQ(root_of_unity_log(CycNum(4, 2)), -1);
}

TEST(Cyclo, FactorOverRationals) {
  // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
  QPoly f{-1, 0, 0, 0, 1};
  auto facs = factor_squarefree_rational(f);
  ASSERT_EQ(facs.size(), 3u);
  EXPECT_EQ(facs[0], (QPoly{-1, 1}));
  EXPECT_EQ(facs[1], (QPoly{1, 1}));
  EXPECT_EQ(facs[2], (QPoly{1, 0, 1}));
  // Phi_8 is irreducible although it splits modulo every prime
  EXPECT_EQ(factor_squarefree_rational(QPoly{1, 0, 0, 0, 1}).size(), 1u);
  // (x^2 - 2)(x^3 - x - 1)(2x + 3) expanded
  QPoly g = q_mul(q_mul(QPoly{-2, 0, 1}, QPoly{-1, -1, 0, 1}), QPoly{3, 2});
  auto gf = factor_squarefree_rational(g);
  ASSERT_EQ(gf.size(), 3u);
  EXPECT_EQ(gf[0], (QPoly{Rational(3, 2), 1}));
  EXPECT_EQ(gf[1], (QPoly{-2, 0, 1}));
  EXPECT_EQ(gf[2], (QPoly{-1, -1, 0, 1}));
  // multiplicities
  auto mf = factor_rational(q_mul(q_mul(QPoly{-1, 1}, QPoly{-1, 1}), QPoly{1, 0, 1}));
  ASSERT_EQ(mf.size(), 2u);
  EXPECT_EQ(mf[0].second, 2);
  EXPECT_EQ(mf[1].second, 1);
}

TEST(Cyclo, FactorProductOfCyclotomics) {
  // x^24 - 1 is the product of Phi_d over d | 24
  QPoly f(25);
  f[0] = -1;
  f[24] = 1;
  auto facs = factor_squarefree_rational(f);
  EXPECT_EQ(facs.size(), 8u);
  QPoly prod{1};
  for (auto& h : facs) prod = q_mul(prod, h);
  EXPECT_EQ(prod, f);
}

TEST(Cyclo, RootsInField) {
  // x^2 + 1 has no root in Q(zeta_3): (a + b z)^2 = a^2 - b^2 + (2ab - b^2) z
  // equals -1 only if b = 0 (then a^2 = -1) or b = 2a (then a^2 = 1/3).
  CycPoly p = CycPoly::from_rational({1, 0, 1}, 3);
  EXPECT_TRUE(roots_in_field(p, 3).empty());
  // x^2 + 1 = (x - i)(x + i) over Q(zeta_4)
  auto r4 = roots_in_field(CycPoly::from_rational({1, 0, 1}, 4), 4);
  ASSERT_EQ(r4.size(), 2u);
  EXPECT_EQ(r4[0].value, -CycNum::zeta(4));
  EXPECT_EQ(r4[1].value, CycNum::zeta(4));
  // x^2 - 2 splits in Q(zeta_8): sqrt2 = z - z^3
  auto r8 = roots_in_field(CycPoly::from_rational({-2, 0, 1}, 8), 8);
  ASSERT_EQ(r8.size(), 2u);
  for (auto& r : r8) EXPECT_EQ(r.value * r.value, CycNum(8, 2));
  // x^2 - 2 does not split in Q(zeta_12)
  EXPECT_TRUE(roots_in_field(CycPoly::from_rational({-2, 0, 1}, 12), 12).empty());
}

TEST(Cyclo, RootsWithMultiplicityAndIrrationalCoefficients) {
  CycNum z = CycNum::zeta(12);
  CycNum a = z + CycNum(12, Rational(1, 2));
  CycNum b = z.pow(5) - CycNum(12, 3);
  // (x - a)^2 (x - b) (x - z^3)
  CycPoly p = CycPoly::x_minus(a) * CycPoly::x_minus(a) * CycPoly::x_minus(b) * CycPoly::x_minus(z.pow(3));
  auto roots = roots_in_field(p, 12);
  ASSERT_EQ(roots.size(), 3u);
  int total = 0;
  for (auto& r : roots) {
    EXPECT_TRUE(p.eval(r.value).is_zero());
    total += r.multiplicity;
    if (r.value == a) EXPECT_EQ(r.multiplicity, 2);
  }
  EXPECT_EQ(total, 4);
}

TEST(Cyclo, RootsOfUnityPolynomials) {
  // x^n - 1 splits completely in Q(zeta_n)
  for (int n : {1, 2, 3, 4, 6, 8}) {
    QPoly f(n + 1);
    f[0] = -1;
    f[n] = 1;
    auto roots = roots_in_field(CycPoly::from_rational(f, n), n);
    EXPECT_EQ(static_cast<int>(roots.size()), n);
  }
}
