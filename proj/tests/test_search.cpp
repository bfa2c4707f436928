#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "ydh/catalog.hpp"
#include "ydh/commalg.hpp"
#include "ydh/error.hpp"
#include "ydh/iocli.hpp"

using namespace ydh;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(YDH_FIXTURE_DIR) + "/" + name; }

// Independent oracle for A^(x)A on a permutation module over Z/2 with
// phi = pi and psi_chi = rho: the coaction of b_j is g (x) P_g(b_j) with
// P_g = (1 + chi(g) rho) / 2, and (a (x) a')(b (x) b') = a (a'_(-1).b) (x) a'_(0) b'.
// Elements of A (x) A are d x d coefficient arrays.
using Square = std::vector<std::vector<CycNum>>;

Square twisted_product(const YDHopfAlgebra& a, const std::vector<int>& pi, const std::vector<int>& rho,
                       const Square& x, const Square& y) {
  const int d = a.dim(), n = a.order();
  const CycNum half(n, Rational(1, 2));
  Square out(d, std::vector<CycNum>(d, CycNum(n, 0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (x[i][j].is_zero()) continue;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          if (y[k][l].is_zero()) continue;
          const CycNum c = x[i][j] * y[k][l];
          for (int g = 0; g < 2; ++g) {
            // P_g(b_j) = (b_j + sign * b_rho(j)) / 2 with sign = chi(g) = (-1)^g
            const int moved = g == 0 ? k : pi[k];
            const CycNum sign(n, g == 0 ? 1 : -1);
            for (int p = 0; p < d; ++p)
              for (int q = 0; q < d; ++q) {
                const CycNum left = a.mult()(i, moved, p);
                if (left.is_zero()) continue;
                const CycNum right = half * (a.mult()(j, l, q) + sign * a.mult()(rho[j], l, q));
                if (right.is_zero()) continue;
                out[p][q] += c * left * right;
              }
          }
        }
    }
  return out;
}

Square coproduct_square(const YDHopfAlgebra& a, int k) {
  const int d = a.dim();
  Square s(d, std::vector<CycNum>(d, CycNum(a.order(), 0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s[i][j] = a.comult()(k, i, j);
  return s;
}

SearchResult z2_dim4() {
  static const SearchResult r = [] {
    SearchConfig cfg;
    cfg.group = FinAbGroup({2});
    cfg.dim = 4;
    return search_nontrivial(cfg);
  }();
  return r;
}

}  // namespace

TEST(Search, BudgetValues) {
  std::vector<CycNum> v = budget_values(CoefficientBudget{}, 4);
  // 13 rationals p/q with |p/q| <= 1 and q <= 4, for each of the two coordinates
  EXPECT_EQ(v.size(), 169u);
  EXPECT_TRUE(v[0].is_zero());
  EXPECT_TRUE(v[1].is_one());
  EXPECT_EQ(v[2], CycNum(4, -1));
  std::vector<CycNum> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_THROW(budget_values(CoefficientBudget{4, 3}, 4), NonDivisibleOrders);
}

TEST(Search, DimensionOneIsTheUnitAlgebra) {
  SearchConfig cfg;
  cfg.group = FinAbGroup({2});
  cfg.dim = 1;
  SearchResult r = search_nontrivial(cfg);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_TRUE(r.hits[0].trivial);
  EXPECT_EQ(r.hits[0].algebra.dim(), 1);
  EXPECT_FALSE(r.truncated);
}

TEST(Search, DimensionTwoOverZ2) {
  SearchConfig cfg;
  cfg.group = FinAbGroup({2});
  cfg.dim = 2;
  SearchResult r = search_nontrivial(cfg);
  // K^{Z/2} is the only Hopf structure; the other solution is the monoid {0, 1}
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_TRUE(r.hits[0].trivial);
  EXPECT_EQ(r.bialgebras_without_antipode, 1);
  EXPECT_FALSE(r.truncated);
}

TEST(Search, CoprimeDimensionThreeHasOnlyTrivialInstances) {
  SearchConfig cfg;
  cfg.group = FinAbGroup({2});
  cfg.dim = 3;
  SearchResult pruned = search_nontrivial(cfg);
  cfg.prune = false;
  SearchResult full = search_nontrivial(cfg);
  EXPECT_FALSE(pruned.truncated);
  EXPECT_FALSE(full.truncated);
  EXPECT_GT(pruned.pruned.size(), 0u);
  EXPECT_TRUE(full.pruned.empty());
  for (const auto* r : {&pruned, &full})
    for (const auto& h : r->hits) EXPECT_TRUE(h.trivial);
  // the confirmation run sees the same Hopf algebras
  ASSERT_EQ(pruned.hits.size(), full.hits.size());
  for (size_t i = 0; i < pruned.hits.size(); ++i)
    EXPECT_EQ(render_ydh(pruned.hits[i].algebra), render_ydh(full.hits[i].algebra));
}

TEST(Search, DeterministicForFixedConfig) {
  SearchConfig cfg;
  cfg.group = FinAbGroup({2});
  cfg.dim = 3;
  SearchResult a = search_nontrivial(cfg), b = search_nontrivial(cfg);
  ASSERT_EQ(a.hits.size(), b.hits.size());
  EXPECT_EQ(a.nodes, b.nodes);
  for (size_t i = 0; i < a.hits.size(); ++i) EXPECT_EQ(render_ydh(a.hits[i].algebra), render_ydh(b.hits[i].algebra));
}

TEST(Search, NodeLimitTruncates) {
  SearchConfig cfg;
  cfg.group = FinAbGroup({2});
  cfg.dim = 3;
  cfg.prune = false;
  cfg.node_limit = 5;
  EXPECT_TRUE(search_nontrivial(cfg).truncated);
}

TEST(Search, DimensionFourOverZ2ReproducesTheFixtures) {
  const SearchResult& r = z2_dim4();
  EXPECT_FALSE(r.truncated);
  int written = 0;
  for (const auto& h : r.hits) {
    EXPECT_TRUE(verify_axioms(h.algebra).pass());
    if (h.trivial) continue;
    const std::string name = "search_z2_d4_nontrivial_" + std::to_string(written++) + ".ydh";
    EXPECT_EQ(render_ydh(h.algebra), slurp(fixture(name))) << name;
  }
  EXPECT_EQ(written, 2);
}

TEST(Search, NontrivialHitsObeyTheStructureTheory) {
  for (const auto& h : z2_dim4().hits) {
    const YDHopfAlgebra& a = h.algebra;
    if (h.trivial) continue;
    EXPECT_GT(std::gcd(a.dim(), a.group().order()), 1);
    Analysis an = primitive_idempotents(a);
    bool large_index = false;
    for (const auto& rec : an.records) {
      EXPECT_EQ(a.dim() % rec.index, 0);
      large_index = large_index || rec.index > 1;
    }
    EXPECT_TRUE(large_index);
  }
}

TEST(Search, TwistedProductOracleOnNontrivialFixtures) {
  for (int f = 0; f < 2; ++f) {
    YDHopfAlgebra a = read_ydh_file(fixture("search_z2_d4_nontrivial_" + std::to_string(f) + ".ydh"));
    const std::vector<int> pi = *a.module().phi(1).as_permutation();
    const std::vector<int> rho = *a.module().psi(1).as_permutation();
    const int d = a.dim();
    bool some_cross_term_twisted = false;
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        Square lhs = twisted_product(a, pi, rho, coproduct_square(a, k), coproduct_square(a, l));
        Square rhs(d, std::vector<CycNum>(d, CycNum(a.order(), 0)));
        if (k == l) rhs = coproduct_square(a, k);
        EXPECT_EQ(lhs, rhs) << k << " " << l;
        // the untwisted componentwise product must fail somewhere
        Square plain(d, std::vector<CycNum>(d, CycNum(a.order(), 0)));
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) plain[i][j] = a.comult()(k, i, j) * a.comult()(l, i, j);
        some_cross_term_twisted = some_cross_term_twisted || plain != rhs;
      }
    EXPECT_TRUE(some_cross_term_twisted);
  }
}

TEST(Search, NormalFormAlgebraMatchesFixture) {
  YDHopfAlgebra a = read_ydh_file(fixture("search_z2_d4_nontrivial_0.ydh"));
  const int d = a.dim();
  std::vector<CycNum> c;
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) c.push_back(a.comult()(k, i, j));
  ActionAnsatz an{{*a.module().phi(1).as_permutation()}, {*a.module().psi(1).as_permutation()}};
  YDHopfAlgebra b = normal_form_algebra(a.group(), a.order(), an, c);
  EXPECT_FALSE(b.has_antipode());
  EXPECT_EQ(render_ydh(b.with_antipode(solve_antipode(b))), render_ydh(a));
  EXPECT_THROW(normal_form_algebra(a.group(), a.order(), an, {}), DimensionMismatch);
}
