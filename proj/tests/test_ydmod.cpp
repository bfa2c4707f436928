#include <gtest/gtest.h>

#include "support/random_modules.hpp"
#include "ydh/error.hpp"
#include "ydh/ydmod.hpp"

using namespace ydh;
using namespace ydh::testing;

TEST(YDModule, CoactionExamples) {
  FinAbGroup z2({2});
  YDModule triv = YDModule::trivial(z2, 2, 2);
  Vec v{CycNum(2, 3), CycNum(2, -1)};
  Coaction c = coaction(triv, v);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].first, 0);
  EXPECT_EQ(c[0].second, v);
  // psi_gamma(v) = -v puts v in degree g
  Mat minus(1, 1, 2);
  minus(0, 0) = CycNum(2, -1);
  YDModule odd(z2, 2, 1, ModSide::Left, {Mat::identity(1, 2)}, {minus});
  Coaction co = coaction(odd, {CycNum(2, 1)});
  ASSERT_EQ(co.size(), 1u);
  EXPECT_EQ(co[0].first, 1);
}

TEST(YDModule, RejectsBrokenRelations) {
  FinAbGroup z2({2});
  Mat swap = Mat::permutation({1, 0}, 2);
  Mat diag(2, 2, 2);
  diag(0, 0) = CycNum(2, 1);
  diag(1, 1) = CycNum(2, -1);
  // swap and diag(1,-1) do not commute
  EXPECT_THROW(YDModule(z2, 2, 2, ModSide::Left, {swap}, {diag}), MalformedStructure);
  Mat three = Mat::permutation({1, 2, 0}, 2);
  EXPECT_THROW(YDModule(z2, 2, 3, ModSide::Left, {three}, {}), MalformedStructure);
}

TEST(YDModule, CoactionReconstructsPsiAndRespectsStabilizers) {
  std::mt19937 rng(11);
  for (auto factors : {std::vector<int>{2, 4}, std::vector<int>{2, 2}, std::vector<int>{3}}) {
    FinAbGroup g(factors);
    const int n = static_cast<int>(lcm_int(g.exponent(), 4));
    YDModule m = diagonal_module(g, n, random_summands(rng, g, 3), rng);
    for (const auto& q : all_subgroups(g, Side::Dual)) {
      Vec v = fix_by_psi(m, q, random_vec(rng, 3, n));
      Coaction c = coaction(m, v);
      Subgroup qp = perp(q);
      Vec sum = zero_vec(3, n);
      for (const auto& [x, comp] : c) {
        EXPECT_TRUE(qp.contains(x));
        sum = sum + comp;
      }
      EXPECT_EQ(sum, v);
      for (int chi = 0; chi < g.order(); ++chi) EXPECT_EQ(psi_from_coaction(m, c, chi), m.psi(chi).apply(v));
    }
  }
}

TEST(YDModule, QuasisymmetryExamples) {
  FinAbGroup z2({2});
  YDModule triv = YDModule::trivial(z2, 2, 2);
  EXPECT_EQ(quasisymmetry(triv, triv), flip(2, 2, 2));
  Mat minus(1, 1, 2);
  minus(0, 0) = CycNum(2, -1);
  YDModule v(z2, 2, 1, ModSide::Left, {Mat::identity(1, 2)}, {minus});
  YDModule w(z2, 2, 1, ModSide::Left, {minus}, {});
  EXPECT_EQ(quasisymmetry(v, w)(0, 0), CycNum(2, -1));
  // degree-1 v braids like the flip whatever W is
  YDModule even(z2, 2, 1, ModSide::Left, {minus}, {});
  EXPECT_EQ(quasisymmetry(even, w)(0, 0), CycNum(2, 1));
}

TEST(YDModule, QuasisymmetryIdentities) {
  std::mt19937 rng(5);
  FinAbGroup g({2, 4});
  const int n = 4;
  for (ModSide side : {ModSide::Left, ModSide::Right}) {
    YDModule u = diagonal_module(g, n, random_summands(rng, g, 2), rng, true, side);
    YDModule v = diagonal_module(g, n, random_summands(rng, g, 2), rng, true, side);
    YDModule w = diagonal_module(g, n, random_summands(rng, g, 3), rng, true, side);
    Mat s = quasisymmetry(v, w);
    EXPECT_EQ(s, braiding(v, w));
    EXPECT_TRUE((quasisymmetry_inverse(v, w) * s).is_identity());
    EXPECT_TRUE((s * quasisymmetry_inverse(v, w)).is_identity());
    for (int x = 0; x < g.order(); ++x) {
      EXPECT_EQ(s * kron(v.phi(x), w.phi(x)), kron(w.phi(x), v.phi(x)) * s);
      EXPECT_EQ(s * kron(v.psi(x), w.psi(x)), kron(w.psi(x), v.psi(x)) * s);
    }
    // sigma_{U, V(x)W} = (id_V (x) sigma_{U,W}) (sigma_{U,V} (x) id_W)
    Mat lhs = quasisymmetry(u, tensor(v, w));
    Mat rhs = kron(Mat::identity(2, n), quasisymmetry(u, w)) * kron(quasisymmetry(u, v), Mat::identity(3, n));
    EXPECT_EQ(lhs, rhs);
    // sigma_{U(x)V, W} = (sigma_{U,W} (x) id_V) (id_U (x) sigma_{V,W})
    Mat lhs2 = quasisymmetry(tensor(u, v), w);
    Mat rhs2 = kron(quasisymmetry(u, w), Mat::identity(2, n)) * kron(Mat::identity(2, n), quasisymmetry(v, w));
    EXPECT_EQ(lhs2, rhs2);
  }
}

TEST(YDModule, RightFormulasMatchReversedLeftFormulas) {
  std::mt19937 rng(17);
  FinAbGroup g({2, 2});
  YDModule v = diagonal_module(g, 2, random_summands(rng, g, 2), rng);
  YDModule w = diagonal_module(g, 2, random_summands(rng, g, 3), rng);
  Mat right = quasisymmetry(v.with_side(ModSide::Right), w.with_side(ModSide::Right));
  EXPECT_EQ(right, flip(2, 3, 2) * quasisymmetry(w, v) * flip(2, 3, 2));
  // exchanging phi and psi turns the right braiding into a left braiding
  EXPECT_EQ(right, quasisymmetry(v.swap_actions(), w.swap_actions()));
}

TEST(YDModule, RefinedFormulaMatchesGenericOnRandomStabilizedElements) {
  std::mt19937 rng(23);
  int checked = 0;
  for (auto factors : {std::vector<int>{2, 4}, std::vector<int>{2, 2, 2}, std::vector<int>{8}}) {
    FinAbGroup g(factors);
    const int n = g.exponent();
    auto ts = all_subgroups(g, Side::Group);
    auto qs = all_subgroups(g, Side::Dual);
    for (ModSide side : {ModSide::Left, ModSide::Right}) {
      YDModule vm = diagonal_module(g, n, random_summands(rng, g, 3), rng, true, side);
      YDModule wm = diagonal_module(g, n, random_summands(rng, g, 2), rng, true, side);
      Mat generic = quasisymmetry(vm, wm);
      for (int trial = 0; trial < 12; ++trial) {
        const Subgroup& t = ts[rng() % ts.size()];
        const Subgroup& q = qs[rng() % qs.size()];
        Vec v = random_vec(rng, 3, n), w = random_vec(rng, 2, n);
        if (side == ModSide::Left) {
          v = fix_by_psi(vm, q, v);
          w = fix_by_phi(wm, t, w);
        } else {
          v = fix_by_phi(vm, t, v);
          w = fix_by_psi(wm, q, w);
        }
        EXPECT_EQ(quasisymmetry_refined(vm, wm, v, w, t, q), generic.apply(tensor_vec(v, w)));
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 60);
  // trivial subgroups reduce to the generic formula; unfixed input is rejected
  FinAbGroup g({4});
  YDModule vm = diagonal_module(g, 4, {{1, 1}, {2, 3}}, rng);
  Vec v = random_vec(rng, 2, 4);
  EXPECT_EQ(quasisymmetry_refined(vm, vm, v, v, trivial_subgroup(g, Side::Group), trivial_subgroup(g, Side::Dual)),
            quasisymmetry(vm, vm).apply(tensor_vec(v, v)));
  EXPECT_THROW(quasisymmetry_refined(vm, vm, v, v, whole(g, Side::Group), trivial_subgroup(g, Side::Dual)),
               PreconditionViolated);
}

TEST(YDModule, DualityAndAdjointness) {
  std::mt19937 rng(29);
  FinAbGroup g({2, 4});
  YDModule v = diagonal_module(g, 4, random_summands(rng, g, 2), rng);
  YDModule w = diagonal_module(g, 4, random_summands(rng, g, 3), rng);
  YDModule vd = dual(v), wd = dual(w);
  EXPECT_EQ(vd.side(), ModSide::Right);
  YDModule vdd = dual(vd);
  for (int x = 0; x < g.order(); ++x) {
    EXPECT_EQ(vdd.phi(x), v.phi(x));
    EXPECT_EQ(vdd.psi(x), v.psi(x));
  }
  // <sigma_{V,W}(v (x) w), f' (x) f> = <v (x) w, sigma_{W*,V*}(f' (x) f)>
  Mat s = quasisymmetry(v, w), sd = quasisymmetry(wd, vd);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = tensor_vec(random_vec(rng, 2, 4), random_vec(rng, 3, 4));
    Vec f = tensor_vec(random_vec(rng, 3, 4), random_vec(rng, 2, 4));
    Vec sx = s.apply(x), sf = sd.apply(f);
    CycNum lhs(4), rhs(4);
    for (size_t i = 0; i < sx.size(); ++i) lhs += sx[i] * f[i];
    for (size_t i = 0; i < x.size(); ++i) rhs += x[i] * sf[i];
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_EQ(sd, s.transpose());
}

TEST(YDModule, TensorWithTrivialLine) {
  std::mt19937 rng(31);
  FinAbGroup g({2, 2});
  YDModule v = diagonal_module(g, 2, random_summands(rng, g, 3), rng);
  YDModule line = YDModule::trivial(g, 2, 1);
  YDModule vt = tensor(v, line);
  for (int x = 0; x < g.order(); ++x) {
    EXPECT_EQ(vt.phi(x), v.phi(x));
    EXPECT_EQ(vt.psi(x), v.psi(x));
  }
}

TEST(YDModule, ChangeOfGroupsPreservesQuasisymmetry) {
  std::mt19937 rng(37);
  // Z/4 with phi through characters trivial on {0,2}: factors over Z/2
  FinAbGroup z4({4});
  YDModule m = diagonal_module(z4, 4, {{0, 1}, {2, 3}, {2, 0}}, rng);
  Subgroup t = generated(z4, Side::Group, {2});
  GroupChange gc = restrict_group(m, t, trivial_subgroup(z4, Side::Dual));
  EXPECT_EQ(gc.module.group().factors(), std::vector<int>{2});
  EXPECT_EQ(braiding(gc.module, gc.module), braiding(m, m));
  // exhaustive over every (T, Q) acting trivially, several groups
  for (auto factors : {std::vector<int>{2, 4}, std::vector<int>{2, 2}, std::vector<int>{6}}) {
    FinAbGroup g(factors);
    const int n = static_cast<int>(lcm_int(g.exponent(), 4));
    auto ts = all_subgroups(g, Side::Group);
    auto qs = all_subgroups(g, Side::Dual);
    const Subgroup& t0 = ts[rng() % ts.size()];
    const Subgroup& q0 = qs[rng() % qs.size()];
    // characters in T0^perp and degrees in Q0^perp make T0, Q0 act trivially
    auto tp = perp(t0).elems, qp = perp(q0).elems;
    std::vector<std::pair<int, int>> sm;
    for (int k = 0; k < 3; ++k) sm.emplace_back(tp[rng() % tp.size()], qp[rng() % qp.size()]);
    YDModule mod = diagonal_module(g, n, sm, rng);
    Mat sigma = braiding(mod, mod);
    int valid = 0;
    for (const auto& t : ts)
      for (const auto& q : qs) {
        bool ok = true;
        for (int x : t.elems) ok = ok && mod.phi(x).is_identity();
        for (int x : q.elems) ok = ok && mod.psi(x).is_identity();
        if (!ok) {
          EXPECT_THROW(restrict_group(mod, t, q), PreconditionViolated);
          continue;
        }
        ++valid;
        GroupChange r = restrict_group(mod, t, q);
        EXPECT_EQ(r.module.group().order() * intersect(t, perp(q)).order(), perp(q).order());
        EXPECT_EQ(braiding(r.module, r.module), sigma);
      }
    EXPECT_GE(valid, 1);
  }
  // T = G, Q = all characters on a trivial module: trivial index group
  YDModule tm = YDModule::trivial(z4, 4, 2);
  GroupChange all = restrict_group(tm, whole(z4, Side::Group), whole(z4, Side::Dual));
  EXPECT_EQ(all.module.group().order(), 1);
}
