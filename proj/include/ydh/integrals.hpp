#pragma once

#include <optional>

#include "ydh/report.hpp"
#include "ydh/ydhopf.hpp"

namespace ydh {

struct IntegralPair {
  Vec element;     // Lambda, normalized by eps(Lambda) = 1
  Vec functional;  // lambda as a row, the trace of the left regular representation
};

/*
 * Solves aL = eps(a)L = La over the basis.  Throws NotUnique when the
 * solution space is not a line and NotSemisimple when eps vanishes on it.
 * The trace functional is cross-checked against the functional solved from
 * its own invariance equations; a disagreement throws FormulaMismatch.
 */
IntegralPair compute_integrals(const YDHopfAlgebra& a);

// The Frobenius and cocommutativity identities of the normalized pair.
CheckReport verify_integral_properties(const YDHopfAlgebra& a, const IntegralPair& p);

struct Freeness {
  int rank = 0;  // dim A / dim B
  CheckReport report;
};

/*
 * B is the span of the columns of `basis`.  Throws NotUnitalSubalgebra or
 * NotSubcoalgebra when B is not a sub-bialgebra, and NonIntegralRank when
 * lambda_A(Lambda_B) is not a positive integer.  `module` supplies B's own
 * Yetter-Drinfel'd structure, possibly over another group; without it the
 * actions of A are restricted.
 */
Freeness check_freeness(const YDHopfAlgebra& a, const Mat& basis, const std::optional<YDModule>& module = std::nullopt);

}  // namespace ydh
