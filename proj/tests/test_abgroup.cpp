#include <gtest/gtest.h>

#include <set>

#include "ydh/abgroup.hpp"
#include "ydh/error.hpp"

using namespace ydh;

namespace {

const std::vector<FinAbGroup>& sample_groups() {
  static const std::vector<FinAbGroup> gs{FinAbGroup({2}),    FinAbGroup({4}),    FinAbGroup({2, 2}),
                                          FinAbGroup({6}),    FinAbGroup({2, 4}), FinAbGroup({8}),
                                          FinAbGroup({2, 2, 2}), FinAbGroup({3, 3})};
  return gs;
}

}  // namespace

TEST(AbGroup, ElementsAndPairing) {
  FinAbGroup g({2, 4});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.exponent(), 4);
  EXPECT_EQ(g.element(5), (FinAbGroup::Elem{1, 1}));
  EXPECT_EQ(g.index({1, 1}), 5);
  EXPECT_EQ(g.elem_order(g.index({1, 2})), 2);
  EXPECT_EQ(g.elem_order(g.index({1, 1})), 4);
  // chi(1,1)(g(1,1)) = (-1) * i = zeta_4^3
  EXPECT_EQ(g.pairing_exp(g.index({1, 1}), g.index({1, 1})), 3);
  EXPECT_EQ(g.pairing(g.index({1, 1}), g.index({1, 1}), 4), CycNum::zeta(4, 3));
  EXPECT_EQ(g.elem_str(5, true), "chi(1,1)");
}

TEST(AbGroup, ParseAndRender) {
  EXPECT_EQ(FinAbGroup::parse("Z/2 x Z/4").factors(), (std::vector<int>{2, 4}));
  EXPECT_EQ(FinAbGroup::parse("Z/2 x Z/4").str(), "Z/2 x Z/4");
  EXPECT_EQ(FinAbGroup::parse("trivial").order(), 1);
  EXPECT_THROW(FinAbGroup::parse("Z/2 * Z/4"), ParseError);
  EXPECT_THROW(FinAbGroup::parse("Z/"), ParseError);
}

TEST(AbGroup, PerpOfCyclicSubgroupInZ2xZ4) {
  // chi(c) kills g(1,2) iff c1/2 + 2 c2/4 is an integer, i.e. c1 + c2 even
  FinAbGroup g({2, 4});
  Subgroup s = generated(g, Side::Group, {g.index({1, 2})});
  Subgroup p = perp(s);
  EXPECT_EQ(p.side, Side::Dual);
  std::vector<int> expect{g.index({0, 0}), g.index({0, 2}), g.index({1, 1}), g.index({1, 3})};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(p.elems, expect);
}

TEST(AbGroup, PerpProperties) {
  for (const auto& g : sample_groups()) {
    for (Side side : {Side::Group, Side::Dual}) {
      auto subs = all_subgroups(g, side);
      for (const auto& s : subs) {
        Subgroup p = perp(s);
        EXPECT_EQ(s.order() * p.order(), g.order());
        EXPECT_EQ(perp(p), s);
      }
      for (const auto& a : subs)
        for (const auto& b : subs) EXPECT_EQ(perp(intersect(a, b)), product(perp(a), perp(b)));
    }
  }
}

TEST(AbGroup, SubgroupCounts) {
  // Z/2 x Z/2 has 5 subgroups, Z/2 x Z/4 has 8, Z/8 has 4, (Z/2)^3 has 16
  EXPECT_EQ(all_subgroups(FinAbGroup({2, 2}), Side::Group).size(), 5u);
  EXPECT_EQ(all_subgroups(FinAbGroup({2, 4}), Side::Group).size(), 8u);
  EXPECT_EQ(all_subgroups(FinAbGroup({8}), Side::Group).size(), 4u);
  EXPECT_EQ(all_subgroups(FinAbGroup({2, 2, 2}), Side::Group).size(), 16u);
}

TEST(AbGroup, OrthogonalitySum) {
  for (const auto& g : sample_groups()) {
    for (const auto& s : all_subgroups(g, Side::Dual)) {
      Subgroup p = perp(s);
      for (int x = 0; x < g.order(); ++x) {
        CycNum sum = orthogonality_sum(s, x, g.exponent());
        if (p.contains(x))
          EXPECT_EQ(sum, CycNum(1, s.order()));
        else
          EXPECT_TRUE(sum.is_zero());
      }
    }
  }
}

TEST(AbGroup, QuotientIsHomomorphicModel) {
  for (const auto& g : sample_groups()) {
    auto subs = all_subgroups(g, Side::Group);
    for (const auto& s : subs) {
      for (const auto& n : subs) {
        if (!n.is_subgroup_of(s)) continue;
        Quotient q = quotient(s, n);
        EXPECT_EQ(q.group.order() * n.order(), s.order());
        for (int i = 0; i < q.group.rank(); ++i) EXPECT_EQ(q.proj[q.lifts[i]], q.group.generator(i));
        for (int x : s.elems)
          for (int y : s.elems) EXPECT_EQ(q.proj[g.add(x, y)], q.group.add(q.proj[x], q.proj[y]));
        for (int x : n.elems) EXPECT_EQ(q.proj[x], 0);
        // invariant-factor chain
        const auto& f = q.group.factors();
        for (size_t i = 1; i < f.size(); ++i) EXPECT_EQ(f[i] % f[i - 1], 0);
        auto reps = coset_reps(s, n);
        EXPECT_EQ(static_cast<int>(reps.size()), q.group.order());
      }
    }
  }
}

TEST(AbGroup, CharactersOfSubquotientMatchPerpQuotient) {
  // T^perp / (Q cap T^perp) is the character group of Q^perp / (T cap Q^perp)
  for (const auto& g : sample_groups()) {
    auto ts = all_subgroups(g, Side::Group);
    auto qs = all_subgroups(g, Side::Dual);
    for (const auto& t : ts) {
      for (const auto& qd : qs) {
        Subgroup qp = perp(qd), tp = perp(t);
        Quotient gq = quotient(qp, intersect(t, qp));
        Subgroup kernel = intersect(qd, tp);
        std::set<int> image;
        for (int gamma : tp.elems) {
          int chi = induced_character(g, gq, gamma);
          image.insert(chi);
          // the induced character agrees with gamma on lifts of every element
          for (int x : qp.elems)
            EXPECT_EQ(gq.group.pairing(chi, gq.proj[x], g.exponent()), g.pairing(gamma, x, g.exponent()));
          if (kernel.contains(gamma)) EXPECT_EQ(chi, 0);
        }
        EXPECT_EQ(static_cast<int>(image.size()), gq.group.order());
        EXPECT_EQ(tp.order(), gq.group.order() * kernel.order());
        EXPECT_EQ(qp.order() * kernel.order(), tp.order() * intersect(t, qp).order());
      }
    }
  }
}
