#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ydh {

using Rational = mpq_class;
using Integer = mpz_class;

int euler_phi(int n);
long lcm_int(long a, long b);

// Ascending integer coefficients of the monic polynomial Phi_n.
const std::vector<long>& cyclotomic_polynomial(int n);

struct CycloField;  // per-order reduction tables, never freed

/*
 * Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), reduced
 * modulo Phi_N.  Every value owns exactly phi(N) rational coefficients, so
 * two values of the same order are equal iff their coefficient vectors are.
 * Operands of different orders are embedded into Q(zeta_lcm) first.
 */
class CycNum {
 public:
  CycNum();  // 0 in Q(zeta_1)
  explicit CycNum(int order);
  CycNum(int order, const Rational& q);
  CycNum(int order, long q) : CycNum(order, Rational(q)) {}
  // Coefficients of an arbitrary polynomial in z; reduced on construction.
  CycNum(int order, const std::vector<Rational>& poly);

  static CycNum zeta(int order, long power = 1);

  int order() const;
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CycNum embed(int target_order) const;
  CycNum inverse() const;
  Rational norm() const;
  // Multiplication matrix in the power basis (row-major phi x phi).
  std::vector<Rational> mult_matrix() const;

  CycNum pow(long e) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  // Canonical total order: coefficient vectors compared lexicographically
  // after embedding into a common field.
  friend std::strong_ordering operator<=>(const CycNum& a, const CycNum& b);

  // Canonical text: ascending powers, reduced fractions, zero terms omitted.
  std::string str() const;
  static CycNum parse(std::string_view text, int order);

 private:
  CycNum(const CycloField* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}
  void align(CycNum& other);
  const CycloField* f_;
  std::vector<Rational> c_;
};

// Embeds a value of order `from` into Q(zeta_to); `from` must divide `to`.
CycNum embed(int from, int to, const CycNum& x);
CycNum root_of_unity(int order, int k, int field_order);

// Exponent k with x == zeta_M^k for M = lcm(2, order), or -1.
long root_of_unity_log(const CycNum& x);

std::ostream& operator<<(std::ostream& os, const CycNum& x);

}  // namespace ydh
