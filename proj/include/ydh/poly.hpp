#pragma once

#include <utility>
#include <vector>

#include "ydh/cyclo.hpp"

namespace ydh {

// Dense polynomials, ascending coefficients, no trailing zeros (zero poly is empty).
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(QPoly& p);
int deg(const QPoly& p);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b);
QPoly q_gcd(QPoly a, QPoly b);  // monic
QPoly q_derivative(const QPoly& p);
QPoly q_monic(const QPoly& p);

// Irreducible monic factors over Q of a squarefree polynomial.  With
// `degree_cap` > 0 only factors of degree <= cap are guaranteed to be
// irreducible; the last entry is then the unsplit remainder (if non-constant).
std::vector<QPoly> factor_squarefree_rational(const QPoly& f, int degree_cap = 0);

// Full factorization over Q into monic irreducibles with multiplicities.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<CycNum> c);
  static CycPoly from_rational(const QPoly& p, int order);
  static CycPoly x_minus(const CycNum& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycNum>& coeffs() const { return c_; }
  const CycNum& lead() const { return c_.back(); }
  bool is_rational() const;
  QPoly to_rational() const;

  CycNum eval(const CycNum& x) const;
  CycPoly derivative() const;
  CycPoly monic() const;
  CycPoly compose_shift(const CycNum& s) const;  // p(x + s)

  friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.c_ == b.c_; }
  static std::pair<CycPoly, CycPoly> divrem(const CycPoly& a, const CycPoly& b);
  static CycPoly gcd(CycPoly a, CycPoly b);  // monic

 private:
  void trim();
  std::vector<CycNum> c_;
};

// Squarefree factors f_i with p = lc * prod f_i^i (Yun).
std::vector<std::pair<CycPoly, int>> squarefree_decomposition(const CycPoly& p);

// Norm polynomial prod_sigma sigma(p) in Q[x] for p over Q(zeta_N).
QPoly norm_polynomial(const CycPoly& p, int order);

struct Root {
  CycNum value;
  int multiplicity;
};

// All roots of p in Q(zeta_N), sorted canonically, with multiplicities.
std::vector<Root> roots_in_field(const CycPoly& p, int order);

}  // namespace ydh
