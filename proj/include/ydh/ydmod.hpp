#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ydh/abgroup.hpp"
#include "ydh/exactla.hpp"

namespace ydh {

enum class ModSide { Left, Right };

ModSide opposite(ModSide s);

/*
 * Yetter-Drinfel'd module over K[G], G finite abelian, held as two commuting
 * representations: phi of G (the action) and psi of the character group (the
 * coaction read through characters).  Tables cover every element; element
 * and character indices follow FinAbGroup.  A Right module uses the right
 * action with the same matrices; for abelian G only the braiding changes.
 */
class YDModule {
 public:
  YDModule() = default;
  // Generator lists follow FinAbGroup::generator(i); an empty list means
  // the trivial action.  Throws MalformedStructure on failed relations.
  YDModule(FinAbGroup g, int order, int dim, ModSide side, std::vector<Mat> phi_gens,
           std::vector<Mat> psi_gens);
  static YDModule trivial(const FinAbGroup& g, int order, int dim, ModSide side = ModSide::Left);

  const FinAbGroup& group() const { return g_; }
  int order() const { return n_; }
  int dim() const { return d_; }
  ModSide side() const { return side_; }

  const Mat& phi(int g) const { return phi_.at(g); }
  const Mat& psi(int chi) const { return psi_.at(chi); }
  // (1/|G|) sum_chi chi(g)^{-1} psi_chi: projection onto the degree-g part.
  const Mat& degree_projection(int g) const { return proj_.at(g); }
  // chi(g) in Q(zeta_N).
  const CycNum& chi_value(int chi, int g) const { return (*chars_)[static_cast<size_t>(chi) * g_.order() + g]; }

  std::vector<Mat> phi_generators() const;
  std::vector<Mat> psi_generators() const;
  bool phi_trivial() const;
  bool psi_trivial() const;

  YDModule with_side(ModSide s) const;
  // Exchanges phi and psi, reading the character group as a group.
  YDModule swap_actions() const;

 private:
  void build(std::vector<Mat> phi_gens, std::vector<Mat> psi_gens);
  FinAbGroup g_;
  int n_ = 1;
  int d_ = 0;
  ModSide side_ = ModSide::Left;
  std::vector<Mat> phi_, psi_, proj_;
  std::shared_ptr<const std::vector<CycNum>> chars_;
};

Vec tensor_vec(const Vec& v, const Vec& w);

// Homogeneous components of v: pairs (g, v_g) with v_g nonzero, g ascending.
using Coaction = std::vector<std::pair<int, Vec>>;
Coaction coaction(const YDModule& v_mod, const Vec& v);
// gamma(v^(1)) v^(2) recomputed from a coaction.
Vec psi_from_coaction(const YDModule& v_mod, const Coaction& c, int chi);

// sigma_{V,W}: V (x) W -> W (x) V evaluated by the literal double sum over
// G x G^; sides must agree.
Mat quasisymmetry(const YDModule& v, const YDModule& w);
Mat quasisymmetry_inverse(const YDModule& v, const YDModule& w);  // W (x) V -> V (x) W
// Same map through the degree projections; used inside the Hopf layer.
Mat braiding(const YDModule& v, const YDModule& w);

// Subgroup-restricted sum for stabilized v and w; throws PreconditionViolated
// when the stabilizer hypotheses fail.  Left: psi fixes v on Q, phi fixes w
// on T.  Right: phi fixes v on T, psi fixes w on Q.
Vec quasisymmetry_refined(const YDModule& v_mod, const YDModule& w_mod, const Vec& v, const Vec& w,
                          const Subgroup& t, const Subgroup& q);

YDModule tensor(const YDModule& v, const YDModule& w);
// Transposed actions on V*; a Left module becomes Right and vice versa.
YDModule dual(const YDModule& v);

struct GroupChange {
  YDModule module;  // over G' = Q^perp / (T cap Q^perp)
  Quotient quotient;
  std::vector<int> char_lift;  // character of G' -> representative in T^perp
};

// Requires phi trivial on T and psi trivial on Q.
GroupChange restrict_group(const YDModule& v, const Subgroup& t, const Subgroup& q);

}  // namespace ydh
