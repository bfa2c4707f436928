#pragma once

#include "ydh/ydhopf.hpp"

namespace ydh::testing {

// K[x]/(x^2) over K[Z/2]: phi_g(x) = -x, x of degree g, x primitive.
// Not semisimple; its axioms hold only with the twisted product on A^(x)A.
inline YDHopfAlgebra exterior_algebra(bool twisted = true) {
  const int n = 2;
  FinAbGroup z2({2});
  const CycNum one(n, 1);
  Tensor3 mult(2, 2, 2, n), comult(2, 2, 2, n);
  mult(0, 0, 0) = one;
  mult(0, 1, 1) = one;
  mult(1, 0, 1) = one;
  comult(0, 0, 0) = one;
  comult(1, 1, 0) = one;
  comult(1, 0, 1) = one;
  Mat sign(2, 2, n);
  sign(0, 0) = one;
  sign(1, 1) = CycNum(n, -1);
  YDModule m = twisted ? YDModule(z2, n, 2, ModSide::Left, {sign}, {sign}) : YDModule::trivial(z2, n, 2);
  return YDHopfAlgebra(m, mult, unit_vec(2, 0, n), comult, Vec{one, CycNum(n)},
                       std::nullopt, {"1", "x"});
}

}  // namespace ydh::testing
