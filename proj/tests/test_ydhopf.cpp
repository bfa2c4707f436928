#include <gtest/gtest.h>

#include "support/exterior.hpp"
#include "support/random_modules.hpp"
#include "ydh/catalog.hpp"
#include "ydh/error.hpp"
#include "ydh/ydhopf.hpp"

using namespace ydh;
using namespace ydh::testing;

namespace {

std::vector<std::string> failed(const AxiomReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

Tensor3 perturbed_mult(const YDHopfAlgebra& a, int i, int j, int k) {
  Tensor3 t = a.mult();
  t(i, j, k) += CycNum(a.order(), 1);
  return t;
}

}  // namespace

TEST(YDHopf, GroupAlgebraPassesAndPerturbationFails) {
  YDHopfAlgebra a = trivial_instance(FinAbGroup({2}), AlgebraKind::GroupAlgebra, FinAbGroup({3}));
  AxiomReport r = verify_axioms(a);
  EXPECT_TRUE(r.pass()) << ::testing::PrintToString(failed(r));
  EXPECT_TRUE(is_trivial(a).trivial);
  YDHopfAlgebra bad(a.module(), perturbed_mult(a, 1, 1, 0), a.unit(), a.comult(), a.counit(), a.antipode());
  AxiomReport rb = verify_axioms(bad);
  EXPECT_FALSE(rb.pass());
  const AxiomCheck& assoc = rb.get("associativity");
  EXPECT_FALSE(assoc.pass);
  ASSERT_EQ(assoc.witness.size(), 3u);
  // the witness really breaks associativity
  const int d = 3, n = a.order();
  auto b = [&](int i) { return unit_vec(d, i, n); };
  const auto& w = assoc.witness;
  EXPECT_NE(bad.multiply(bad.multiply(b(w[0]), b(w[1])), b(w[2])),
            bad.multiply(b(w[0]), bad.multiply(b(w[1]), b(w[2]))));
}

TEST(YDHopf, ExteriorAlgebraNeedsTheTwistedProduct) {
  YDHopfAlgebra x = exterior_algebra();
  AxiomReport r = verify_axioms(x);
  EXPECT_TRUE(r.pass()) << ::testing::PrintToString(failed(r));
  Mat s = solve_antipode(x);
  EXPECT_EQ(s(0, 0), CycNum(2, 1));
  EXPECT_EQ(s(1, 1), CycNum(2, -1));
  Triviality t = is_trivial(x);
  EXPECT_FALSE(t.trivial);
  ASSERT_TRUE(t.witness.has_value());
  EXPECT_EQ(*t.witness, std::make_pair(1, 1));
  AxiomReport flat = verify_axioms(exterior_algebra(false));
  EXPECT_FALSE(flat.get("comult_multiplicative").pass);
  EXPECT_TRUE(flat.get("associativity").pass);
}

TEST(YDHopf, CachedBraidingMatchesModuleQuasisymmetry) {
  std::mt19937 rng(41);
  YDHopfAlgebra base = trivial_instance(FinAbGroup({2, 4}), AlgebraKind::GroupAlgebra, FinAbGroup({3}), 4);
  for (ModSide side : {ModSide::Left, ModSide::Right}) {
    YDModule m = diagonal_module(base.group(), 4, random_summands(rng, base.group(), 3), rng, true, side);
    YDHopfAlgebra a = base.with_module(m);
    Mat q = quasisymmetry(m, m);
    const int d = 3;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec col = a.braid(unit_vec(d * d, i * d + j, 4));
        EXPECT_EQ(col, q.col(i * d + j));
      }
  }
}

TEST(YDHopf, DualOfGroupAlgebraIsFunctionAlgebra) {
  FinAbGroup g({2, 2});
  for (const auto& c : {FinAbGroup({3}), FinAbGroup({2, 2}), FinAbGroup({4})}) {
    YDHopfAlgebra kc = trivial_instance(g, AlgebraKind::GroupAlgebra, c);
    YDHopfAlgebra fc = trivial_instance(g, AlgebraKind::DualGroupAlgebra, c);
    YDHopfAlgebra dual_kc = dualize(kc);
    EXPECT_EQ(dual_kc.mult(), fc.mult());
    EXPECT_EQ(dual_kc.comult(), fc.comult());
    EXPECT_EQ(dual_kc.unit(), fc.unit());
    EXPECT_EQ(dual_kc.counit(), fc.counit());
    EXPECT_EQ(dual_kc.antipode(), fc.antipode());
    EXPECT_EQ(dual_kc.side(), ModSide::Right);
    EXPECT_TRUE(verify_axioms(dual_kc).pass());
    // op_cop of a commutative cocommutative algebra only flips the side
    YDHopfAlgebra oc = op_cop(fc);
    EXPECT_EQ(oc.mult(), fc.mult());
    EXPECT_EQ(oc.comult(), fc.comult());
  }
}

TEST(YDHopf, DualityPairingAndDoubleDual) {
  std::mt19937 rng(43);
  for (const YDHopfAlgebra& a : {exterior_algebra(),
                                 trivial_instance(FinAbGroup({2}), AlgebraKind::GroupAlgebra, FinAbGroup({4}))}) {
    YDHopfAlgebra ad = dualize(a);
    AxiomReport r = verify_axioms(ad);
    EXPECT_TRUE(r.pass()) << ::testing::PrintToString(failed(r));
    EXPECT_EQ(is_trivial(ad).trivial, is_trivial(a).trivial);
    YDHopfAlgebra add = dualize(ad);
    EXPECT_EQ(add.mult(), a.mult());
    EXPECT_EQ(add.comult(), a.comult());
    EXPECT_EQ(add.side(), a.side());
    EXPECT_EQ(add.basis_names(), a.basis_names());
    const int d = a.dim(), n = a.order();
    for (int trial = 0; trial < 6; ++trial) {
      Vec x = random_vec(rng, d, n), y = random_vec(rng, d, n), f = random_vec(rng, d, n), h = random_vec(rng, d, n);
      // <x (x) y, Delta*(f)> = <xy, f> and <Delta(x), f (x) h> = <x, f h>
      EXPECT_EQ(pair_tensor(tensor_vec(x, y), ad.coproduct(f)), pair_tensor(a.multiply(x, y), f));
      EXPECT_EQ(pair_tensor(a.coproduct(x), tensor_vec(f, h)), pair_tensor(x, ad.multiply(f, h)));
      // the braidings of A and A* are adjoint
      Vec xy = tensor_vec(x, y), fh = tensor_vec(f, h);
      EXPECT_EQ(pair_tensor(a.braid(xy), fh), pair_tensor(xy, ad.braid(fh)));
    }
  }
}

TEST(YDHopf, OpCopAndBaseSwapPreserveAxioms) {
  YDHopfAlgebra x = exterior_algebra();
  YDHopfAlgebra oc = op_cop(x);
  EXPECT_EQ(oc.side(), ModSide::Right);
  EXPECT_TRUE(verify_axioms(oc).pass());
  YDHopfAlgebra swapped = to_left_over_dual(dualize(x));
  EXPECT_EQ(swapped.side(), ModSide::Left);
  AxiomReport r = verify_axioms(swapped);
  EXPECT_TRUE(r.pass()) << ::testing::PrintToString(failed(r));
  EXPECT_THROW(to_left_over_dual(x), PreconditionViolated);
}

TEST(YDHopf, SolveAntipodeOnGroupAndFunctionAlgebras) {
  for (int order : {2, 3, 5}) {
    FinAbGroup c({order});
    for (AlgebraKind k : {AlgebraKind::GroupAlgebra, AlgebraKind::DualGroupAlgebra}) {
      YDHopfAlgebra a = trivial_instance(FinAbGroup({2}), k, c);
      YDHopfAlgebra bare(a.module(), a.mult(), a.unit(), a.comult(), a.counit());
      Mat s = solve_antipode(bare);
      for (int x = 0; x < order; ++x) EXPECT_EQ(s.col(x), unit_vec(order, c.neg(x), a.order()));
    }
  }
  // comultiplication perturbed away from a Hopf structure
  YDHopfAlgebra a = trivial_instance(FinAbGroup({2}), AlgebraKind::GroupAlgebra, FinAbGroup({2}));
  Tensor3 bad = a.comult();
  // Delta(x) = 1 (x) 1 leaves S(x) undetermined
  bad(1, 1, 1) = CycNum(a.order());
  bad(1, 0, 0) = CycNum(a.order(), 1);
  YDHopfAlgebra broken(a.module(), a.mult(), a.unit(), bad, a.counit());
  EXPECT_THROW(solve_antipode(broken), NoAntipode);
  AxiomReport r = verify_axioms(broken);
  EXPECT_FALSE(r.get("antipode").pass);
}

TEST(YDHopf, ChangeOfGroupsAndBasis) {
  YDHopfAlgebra a = trivial_instance(FinAbGroup({2, 2}), AlgebraKind::DualGroupAlgebra, FinAbGroup({2}));
  YDHopfAlgebra over_one = change_group(a, whole(a.group(), Side::Group), whole(a.group(), Side::Dual));
  EXPECT_EQ(over_one.group().order(), 1);
  EXPECT_TRUE(verify_axioms(over_one).pass());
  YDHopfAlgebra same = change_group(a, trivial_subgroup(a.group(), Side::Group), trivial_subgroup(a.group(), Side::Dual));
  EXPECT_EQ(same.group().order(), 4);
  YDHopfAlgebra x = exterior_algebra();
  EXPECT_THROW(change_group(x, whole(x.group(), Side::Group), trivial_subgroup(x.group(), Side::Dual)),
               PreconditionViolated);

  std::mt19937 rng(47);
  Mat p = random_invertible(rng, 2, 2);
  YDHopfAlgebra xb = change_basis(x, p);
  EXPECT_TRUE(verify_axioms(xb).pass());
  EXPECT_FALSE(is_trivial(xb).trivial);
  // K 1 is a Hopf subalgebra; K x is not
  YDHopfAlgebra line = sub_hopf_algebra(x, Mat::from_columns({x.unit()}, 2, 2));
  EXPECT_EQ(line.dim(), 1);
  EXPECT_TRUE(verify_axioms(line).pass());
  EXPECT_THROW(sub_hopf_algebra(x, Mat::from_columns({unit_vec(2, 1, 2)}, 2, 2)), ClosureFailure);
}
