#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydh/abgroup.hpp"
#include "ydh/ydhopf.hpp"

namespace ydh {

enum class AlgebraKind { GroupAlgebra, DualGroupAlgebra };

/*
 * Ordinary Hopf algebra K[C] or K^C over K[G] with trivial action and
 * coaction.  The field order defaults to lcm(2, exp G, exp C), which splits
 * both algebras.
 */
YDHopfAlgebra trivial_instance(const FinAbGroup& g, AlgebraKind kind, const FinAbGroup& c, int order = 0);

struct CatalogEntry {
  std::string name;  // e.g. "K[Z/2 x Z/2] over Z/4"
  YDHopfAlgebra algebra;
};

// K[C] and K^C for C in {Z/2, Z/3, Z/4, Z/2 x Z/2, Z/6} over G in
// {Z/2, Z/4, Z/2 x Z/2}.
std::vector<CatalogEntry> standard_catalog();

}  // namespace ydh

namespace ydh {

// Action ansatz of the normal form: permutations of the idempotents, one per
// generator of G for phi and one per generator of the character group for
// psi.  Index 0 is the integral idempotent and is fixed by all of them.
struct ActionAnsatz {
  std::vector<std::vector<int>> phi;
  std::vector<std::vector<int>> psi;
  friend bool operator==(const ActionAnsatz&, const ActionAnsatz&) = default;
};

/*
 * Allowed values when a coproduct coefficient has to be guessed: elements of
 * Q(zeta_M), M = root_order, whose power-basis coordinates are rationals of
 * absolute value at most 1 with denominator at most max_denominator.  Values
 * forced by linear or quadratic equations are exact and not restricted.
 */
struct CoefficientBudget {
  int max_denominator = 4;
  int root_order = 4;
};

struct SearchConfig {
  FinAbGroup group;
  int dim = 1;
  int order = 0;  // field order; 0 means lcm(root_order, 2 exp G)
  CoefficientBudget budget;
  std::vector<ActionAnsatz> ansatz;  // empty: every ansatz up to conjugation
  long node_limit = 2000000;         // per ansatz
  bool prune = true;  // skip ansatzes excluded by the coprime and divisibility theorems
};

struct SearchHit {
  YDHopfAlgebra algebra;
  bool trivial = true;
  int ansatz = 0;  // index into SearchResult::ansatz
};

struct SearchResult {
  std::vector<ActionAnsatz> ansatz;  // as enumerated, canonical order
  std::vector<int> pruned;           // ansatz indices skipped by pruning
  std::vector<SearchHit> hits;       // Hopf algebras passing verify_axioms, deduplicated
  int bialgebras_without_antipode = 0;
  long nodes = 0;
  bool budget_branching = false;  // some coefficient was guessed from the budget
  bool truncated = false;         // a node limit was hit; results are partial
};

// Canonical enumeration; deterministic for a fixed configuration.
SearchResult search_nontrivial(const SearchConfig& cfg);

// The normal-form algebra for an ansatz and coproduct coefficients
// c[(k * d + i) * d + j] of e_i (x) e_j in Delta(e_k); no antipode.
YDHopfAlgebra normal_form_algebra(const FinAbGroup& g, int order, const ActionAnsatz& an, const std::vector<CycNum>& c);

// Every coefficient value the budget admits, embedded in Q(zeta_order).
std::vector<CycNum> budget_values(const CoefficientBudget& b, int order);

}  // namespace ydh
