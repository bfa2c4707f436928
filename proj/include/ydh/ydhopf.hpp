#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydh/exactla.hpp"
#include "ydh/report.hpp"
#include "ydh/ydmod.hpp"

namespace ydh {

// Sparse image of a basis element: (target index, coefficient) pairs.
using Terms = std::vector<std::pair<int, CycNum>>;

/*
 * Finite-dimensional Yetter-Drinfel'd Hopf algebra over K[G] in structure
 * constants: b_i b_j = sum_k mult(i,j,k) b_k, Delta(b_k) = sum comult(k,i,j)
 * b_i (x) b_j.  Vectors of A (x) A use index i*d + j.  Objects are immutable
 * once built; the braiding of basis tensors is cached at construction.
 */
class YDHopfAlgebra {
 public:
  YDHopfAlgebra() = default;
  // Throws MalformedStructure on shape or field mismatches.
  YDHopfAlgebra(YDModule module, Tensor3 mult, Vec unit, Tensor3 comult, Vec counit,
                std::optional<Mat> antipode = std::nullopt, std::vector<std::string> names = {});

  const YDModule& module() const { return module_; }
  const FinAbGroup& group() const { return module_.group(); }
  int dim() const { return module_.dim(); }
  int order() const { return module_.order(); }
  ModSide side() const { return module_.side(); }
  const Tensor3& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const Tensor3& comult() const { return comult_; }
  const Vec& counit() const { return counit_; }
  bool has_antipode() const { return antipode_.has_value(); }
  const Mat& antipode() const;  // throws PreconditionViolated when absent
  const std::vector<std::string>& basis_names() const { return names_; }

  YDHopfAlgebra with_antipode(Mat s) const;
  YDHopfAlgebra with_module(YDModule m) const;

  const Terms& product_terms(int i, int j) const { return mult_terms_[static_cast<size_t>(i) * dim() + j]; }
  const Terms& coproduct_terms(int k) const { return comult_terms_[k]; }
  // sigma_{A,A}(b_i (x) b_j) with side-appropriate formula.
  const Terms& braid_terms(int i, int j) const { return sigma_terms_[static_cast<size_t>(i) * dim() + j]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec coproduct(const Vec& a) const;
  CycNum counit_of(const Vec& a) const;
  Vec apply_antipode(const Vec& a) const;
  Vec braid(const Vec& x) const;  // on A (x) A
  // Componentwise product on the ordinary tensor square.
  Vec tensor_multiply(const Vec& x, const Vec& y) const;
  // Product of A^(x)A: (a (x) a')(b (x) b') = (mu (x) mu)(a (x) sigma(a' (x) b) (x) b').
  Vec smash_multiply(const Vec& x, const Vec& y) const;
  // Matrix of b -> b_i b (left regular representation).
  Mat left_mult(int i) const;

 private:
  YDModule module_;
  Tensor3 mult_, comult_;
  Vec unit_, counit_;
  std::optional<Mat> antipode_;
  std::vector<std::string> names_;
  std::vector<Terms> mult_terms_, comult_terms_, sigma_terms_;
};

using AxiomCheck = Check;
using AxiomReport = CheckReport;

// Runs every axiom family; an absent antipode is solved first and a failed
// solve is reported under "antipode".
AxiomReport verify_axioms(const YDHopfAlgebra& a);

struct Triviality {
  bool trivial = true;
  std::optional<std::pair<int, int>> witness;  // (i, j) with sigma(b_i (x) b_j) != b_j (x) b_i
};
Triviality is_trivial(const YDHopfAlgebra& a);

// Dual basis structure; the module side flips.
YDHopfAlgebra dualize(const YDHopfAlgebra& a);
// Opposite product and coproduct; the module side flips.
YDHopfAlgebra op_cop(const YDHopfAlgebra& a);
// A right algebra over K[G] read as a left algebra over K[G^] by
// exchanging phi and psi.
YDHopfAlgebra to_left_over_dual(const YDHopfAlgebra& a);
// Requires T and Q to act trivially; structure constants are unchanged.
YDHopfAlgebra change_group(const YDHopfAlgebra& a, const Subgroup& t, const Subgroup& q);

// Throws NoAntipode or NotColinear.
Mat solve_antipode(const YDHopfAlgebra& a);

// Same structure constants read in Q(zeta_order); order must be a multiple
// of the current one.
YDHopfAlgebra extend_field(const YDHopfAlgebra& a, int order);

// New basis b'_i = sum_p p(p, i) b_p; p must be invertible.
YDHopfAlgebra change_basis(const YDHopfAlgebra& a, const Mat& p, std::vector<std::string> names = {});

/*
 * Structure on the span of the columns of `basis` (independent), which must
 * be closed under every structure map and both actions; throws
 * ClosureFailure naming the first map that leaves the span.
 */
YDHopfAlgebra sub_hopf_algebra(const YDHopfAlgebra& a, const Mat& basis, std::vector<std::string> names = {});
// Same, with the module structure supplied instead of restricted; the
// actions of A need not preserve the span.
YDHopfAlgebra sub_hopf_algebra(const YDHopfAlgebra& a, const Mat& basis, const YDModule& module,
                               std::vector<std::string> names = {});

// <x, f> on A (x) A with the straight pairing, used for dual checks.
CycNum pair_tensor(const Vec& x, const Vec& f);

}  // namespace ydh
