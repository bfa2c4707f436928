#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydh/abgroup.hpp"
#include "ydh/integrals.hpp"
#include "ydh/report.hpp"
#include "ydh/ydhopf.hpp"

namespace ydh {

/*
 * Analyzer for commutative semisimple Yetter-Drinfel'd Hopf algebras.
 *
 * Everything below works in "idempotent coordinates": the primitive
 * idempotents e_0..e_{d-1} are the basis of the normal form, so e_i is the
 * i-th unit vector, the character eta_i is the i-th unit row, and A* in its
 * dual basis has the characters as basis.  Idempotents are referred to by
 * index throughout.  A right structure is analyzed through the base swap to
 * a left structure over the character group; the swap exchanges phi and psi
 * and leaves every coordinate unchanged.
 */

struct IdempotentRecord {
  int id = 0;
  Vec e;    // input coordinates
  Vec eta;  // row in input coordinates
  Subgroup inertia;    // T_e in G
  Subgroup isotropy;   // Q_e in the character group
  Quotient index_group;  // G_e = Q_e^perp / (T_e cap Q_e^perp)
  int index = 1;
  std::vector<int> orbit;          // Q_e^perp-orbit of e
  std::vector<int> full_orbit;     // joint orbit under G and the characters
  std::vector<int> stability_set;  // e' with T_e in T_e' and Q_e in Q_e'
};

struct Analysis {
  YDHopfAlgebra input;   // left structure actually analyzed
  bool base_swapped = false;
  YDHopfAlgebra normal;  // idempotent basis
  YDHopfAlgebra dual;    // dualize(normal); its basis is the characters
  Mat basis;             // column i = e_i in input coordinates
  Mat chars;             // row i = eta_i in input coordinates
  IntegralPair integrals;  // of the input, input coordinates
  int lambda_index = 0;    // e_k equal to the integral
  int counit_index = 0;    // eta_k equal to the counit (same k)
  std::vector<std::vector<int>> phi_perm;  // [g][i] = index of phi_g(e_i)
  std::vector<std::vector<int>> psi_perm;  // [chi][i] = index of psi_chi(e_i)
  std::vector<IdempotentRecord> records;
  CheckReport report;  // bookkeeping invariants of the decomposition

  int dim() const { return normal.dim(); }
  const FinAbGroup& group() const { return normal.group(); }
  int order() const { return normal.order(); }
};

/*
 * Wedderburn decomposition through the joint eigenspaces of the left
 * multiplication operators.  Idempotents are ordered descending
 * lexicographically in input coordinates.  Throws NotCommutative,
 * NotSemisimple (from the integral) or NonSplitField when the eigenvalues
 * leave Q(zeta_N); enlarging N in the input is the remedy for the latter.
 */
Analysis primitive_idempotents(const YDHopfAlgebra& a);

/*
 * Evaluates the four integral formulas for the idempotent of a character,
 * with eta^{-1} = eta o S.  All vectors are in the coordinates of `a`.
 * Throws FormulaMismatch when the formulas disagree.
 */
Vec idempotent_from_character(const YDHopfAlgebra& a, const Vec& eta, const Vec& integral);

// eta_e^{-1}(e') = eta_e'^{-1}(e) on all ordered pairs, plus the integral
// formulas against the Wedderburn idempotents.
CheckReport reciprocity_check(const Analysis& an);

struct WUElements {
  int m = 0;
  std::vector<int> orbit;        // O  = {phi_g(e) : g in Q_e'^perp}
  std::vector<int> orbit_prime;  // O' = {psi_chi(e') : chi in T_e^perp}
  std::vector<Vec> w;  // indexed by character
  std::vector<Vec> u;  // indexed by group element
  CheckReport report;
};

WUElements w_u_elements(const Analysis& an, int e, int e_prime);

// Ideal structure of the twisted tensor square attached to (e, e').
CheckReport ideal_structure_checks(const Analysis& an, int e, int e_prime);

struct CharProduct {
  int e = 0, e_prime = 0;
  int m = 0;
  std::vector<int> omegas;            // idempotent indices of the characters, ascending
  std::vector<CycNum> coefficients;   // eta_e eta_e' = sum c_k omega_k
  std::vector<Vec> eigenvectors;      // v_k in idempotent coordinates, same order
  CheckReport report;
};

// Throws DecompositionFailure when the module does not split into lines.
CharProduct character_product(const Analysis& an, int e, int e_prime);

struct ProductCriterion {
  bool is_character = false;     // eta_e eta_e' is a character
  bool perp_in_inertia = false;  // Q_e'^perp inside T_e
  bool braid_is_flip = false;    // sigma(eta_e (x) eta_e') = eta_e' (x) eta_e
};

// Throws EquivalenceViolation when the three conditions disagree.
ProductCriterion character_product_criterion(const Analysis& an, int e, int e_prime);

// Idempotents spanning S(I_e), ascending.
std::vector<int> antipode_image_support(const Analysis& an, int e);

CheckReport antipode_ideal_checks(const Analysis& an, int e);

/*
 * Ideals spanned by subsets of idempotents: S(I) is an ideal exactly when I
 * is closed under the orbits, and every such I containing e contains I_e.
 * All subsets are visited when d <= cap; otherwise unions of orbits and
 * their one-point deletions.
 */
CheckReport ideal_enumeration_checks(const Analysis& an, int cap = 12);

struct StabilitySubalgebra {
  int e = 0;
  std::vector<int> members;  // idempotent indices of the stability set
  Mat basis;                 // columns in the dual (character) coordinates
  YDHopfAlgebra over_g;      // subalgebra of A* over K[G]
  YDHopfAlgebra over_index_group;  // same space over K[G_e]
  Freeness freeness;
  CheckReport report;
};

// Throws ClosureFailure with the offending product.
StabilitySubalgebra stability_subalgebra(const Analysis& an, int e);

struct CoreRecord {
  int e = 0;
  int e_prime = 0;  // chosen in S(I_e)
  int m = 0;
  std::vector<int> omegas;
  Mat basis;  // dual coordinates
  YDHopfAlgebra algebra;  // over K[G_e]
  bool subalgebra_verified = false;
  int freeness_rank = 0;  // dim A / m
  CheckReport report;
};

CoreRecord core(const Analysis& an, int e);

// Coprime triviality plus the set and span identities of its proof; throws
// TheoremViolation when a coprime instance is nontrivial.
CheckReport check_triviality_theorem(const Analysis& an);

struct TrivialSubalgebra {
  YDHopfAlgebra algebra;  // B with A's module structure
  Mat basis;              // columns in the coordinates of A
  int idempotent = 0;     // index-1 idempotent of A* generating B
  int via_core_of = -1;   // idempotent of minimal index > 1 when used
  CheckReport report;
};

/*
 * For cocommutative cosemisimple A of dimension > 1: a trivial sub-Hopf
 * algebra of dimension > 1 found through the analysis of A*.  Throws
 * PreconditionViolated when dim A = 1 or A* is not commutative semisimple.
 */
TrivialSubalgebra find_trivial_subalgebra(const YDHopfAlgebra& a);

struct SuiteOptions {
  bool tensor_ideals = true;
  int subset_cap = 12;
};

struct PairSummary {
  int e = 0, e_prime = 0, m = 0;
  std::vector<int> omegas;
  ProductCriterion criterion;
};

struct SuiteResult {
  std::vector<PairSummary> pairs;  // row-major over (e, e')
  std::vector<CoreRecord> cores;   // one per idempotent
  std::vector<StabilitySubalgebra> stability;
  CheckReport report;  // every check, names prefixed by family and indices
};

// Runs every per-idempotent and per-pair check of the analyzer.
SuiteResult structure_suite(const Analysis& an, const SuiteOptions& opts = {});

}  // namespace ydh
