#include "ydh/cyclo.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "ydh/error.hpp"

namespace ydh {

int euler_phi(int n) {
  if (n <= 0) throw PreconditionViolated("euler_phi of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_int(long a, long b) { return std::lcm(a, b); }

namespace {

// Exact division of integer polynomials (ascending coefficients), divisor monic.
std::vector<long> div_monic(std::vector<long> num, const std::vector<long>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n <= 0) throw PreconditionViolated("cyclotomic polynomial of non-positive order");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = div_monic(num, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  return cache.emplace(n, std::move(num)).first->second;
}

struct CycloField {
  int n = 1;
  int phi = 1;
  // red[k] = coordinates of z^k in the power basis, 0 <= k < n.
  std::vector<std::vector<long>> red;
};

namespace {

const CycloField* field_of(int n) {
  if (n <= 0) throw PreconditionViolated("cyclotomic order must be positive");
  static std::map<int, std::unique_ptr<CycloField>> registry;
  const std::vector<long>& phi_poly = cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry.find(n);
  if (it != registry.end()) return it->second.get();
  auto f = std::make_unique<CycloField>();
  f->n = n;
  f->phi = static_cast<int>(phi_poly.size()) - 1;
  f->red.assign(n, std::vector<long>(f->phi, 0));
  std::vector<long> cur(f->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->red[k] = cur;
    // cur <- z * cur reduced by z^phi = -sum_{i<phi} Phi_i z^i
    long top = cur[f->phi - 1];
    for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < f->phi; ++i) cur[i] -= top * phi_poly[i];
  }
  const CycloField* out = f.get();
  registry.emplace(n, std::move(f));
  return out;
}

}  // namespace

CycNum::CycNum() : CycNum(1) {}

CycNum::CycNum(int order) : f_(field_of(order)), c_(f_->phi) {}

CycNum::CycNum(int order, const Rational& q) : CycNum(order) {
  c_[0] = q;
  c_[0].canonicalize();
}

CycNum::CycNum(int order, const std::vector<Rational>& poly) : CycNum(order) {
  for (size_t k = 0; k < poly.size(); ++k) {
    if (sgn(poly[k]) == 0) continue;
    Rational q = poly[k];
    q.canonicalize();
    const auto& r = f_->red[k % f_->n];
    for (int i = 0; i < f_->phi; ++i)
      if (r[i] != 0) c_[i] += q * r[i];
  }
}

CycNum CycNum::zeta(int order, long power) {
  CycNum out(order);
  long k = ((power % order) + order) % order;
  const auto& r = out.f_->red[k];
  for (int i = 0; i < out.f_->phi; ++i) out.c_[i] = r[i];
  return out;
}

int CycNum::order() const { return f_->n; }

bool CycNum::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

Rational CycNum::rational_value() const {
  if (!is_rational()) throw PreconditionViolated("value is not rational: " + str());
  return c_[0];
}

CycNum CycNum::embed(int target) const {
  if (target == f_->n) return *this;
  if (target % f_->n != 0)
    throw NonDivisibleOrders(std::to_string(f_->n) + " does not divide " + std::to_string(target));
  CycNum out(target);
  const int step = target / f_->n;
  for (int k = 0; k < f_->phi; ++k) {
    if (sgn(c_[k]) == 0) continue;
    const auto& r = out.f_->red[(static_cast<long>(k) * step) % target];
    for (int i = 0; i < out.f_->phi; ++i)
      if (r[i] != 0) out.c_[i] += c_[k] * r[i];
  }
  return out;
}

CycNum embed(int from, int to, const CycNum& x) {
  if (x.order() != from) throw PreconditionViolated("embed: value does not live in the source field");
  return x.embed(to);
}

void CycNum::align(CycNum& other) {
  if (f_ == other.f_) return;
  int l = static_cast<int>(lcm_int(f_->n, other.f_->n));
  if (f_->n != l) *this = embed(l);
  if (other.f_->n != l) other = other.embed(l);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (f_ != o.f_) {
    CycNum b = o;
    align(b);
    return *this += b;
  }
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (f_ != o.f_) {
    CycNum b = o;
    align(b);
    return *this -= b;
  }
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (f_ != o.f_) {
    CycNum b = o;
    align(b);
    return *this *= b;
  }
  if (o.is_rational()) {
    const Rational& s = o.c_[0];
    for (auto& q : c_)
      if (sgn(q) != 0) q *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    c_ = o.c_;
    for (auto& q : c_)
      if (sgn(q) != 0) q *= s;
    return *this;
  }
  const int phi = f_->phi;
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rational> out(phi);
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < phi) {
      out[k] += prod[k];
      continue;
    }
    const auto& r = f_->red[k % f_->n];
    for (int i = 0; i < phi; ++i)
      if (r[i] != 0) out[i] += prod[k] * r[i];
  }
  c_ = std::move(out);
  return *this;
}

std::vector<Rational> CycNum::mult_matrix() const {
  const int phi = f_->phi;
  std::vector<Rational> m(static_cast<size_t>(phi) * phi);
  for (int col = 0; col < phi; ++col) {
    CycNum col_val = *this * CycNum::zeta(f_->n, col);
    for (int row = 0; row < phi; ++row) m[static_cast<size_t>(row) * phi + col] = col_val.c_[row];
  }
  return m;
}

namespace {

// Solves M x = rhs in place over Q; returns the determinant.  Singular
// systems return determinant 0 and leave x unspecified.
Rational gauss_rational(std::vector<Rational> m, int n, std::vector<Rational>* rhs) {
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(m[static_cast<size_t>(r) * n + col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m[static_cast<size_t>(piv) * n + c], m[static_cast<size_t>(col) * n + c]);
      if (rhs) std::swap((*rhs)[piv], (*rhs)[col]);
      det = -det;
    }
    Rational p = m[static_cast<size_t>(col) * n + col];
    det *= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = m[static_cast<size_t>(r) * n + col];
      if (sgn(f) == 0) continue;
      f /= p;
      for (int c = col; c < n; ++c) m[static_cast<size_t>(r) * n + c] -= f * m[static_cast<size_t>(col) * n + c];
      if (rhs) (*rhs)[r] -= f * (*rhs)[col];
    }
  }
  if (rhs)
    for (int r = 0; r < n; ++r) (*rhs)[r] /= m[static_cast<size_t>(r) * n + r];
  return det;
}

}  // namespace

Rational CycNum::norm() const {
  if (is_rational()) {
    Rational out = 1;
    for (int i = 0; i < f_->phi; ++i) out *= c_[0];
    return out;
  }
  return gauss_rational(mult_matrix(), f_->phi, nullptr);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return CycNum(f_->n, Rational(1) / c_[0]);
  std::vector<Rational> rhs(f_->phi);
  rhs[0] = 1;
  gauss_rational(mult_matrix(), f_->phi, &rhs);
  return CycNum(f_, std::move(rhs));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(f_->n, Rational(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  CycNum x = a, y = b;
  x.align(y);
  return x.c_ == y.c_;
}

std::strong_ordering operator<=>(const CycNum& a, const CycNum& b) {
  CycNum x = a, y = b;
  x.align(y);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string render_term(const Rational& c, int k) {
  if (k == 0) return c.get_str();
  std::string zp = (k == 1) ? "z" : "z^" + std::to_string(k);
  if (c == 1) return zp;
  if (c == -1) return "-" + zp;
  return c.get_str() + "*" + zp;
}

}  // namespace

std::string CycNum::str() const {
  std::string out;
  for (int k = 0; k < f_->phi; ++k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      out = render_term(c, k);
    } else if (sgn(c) < 0) {
      out += " - " + render_term(-c, k);
    } else {
      out += " + " + render_term(c, k);
    }
  }
  return out.empty() ? "0" : out;
}

CycNum CycNum::parse(std::string_view s, int order) {
  size_t pos = 0;
  auto col = [&] { return static_cast<int>(pos) + 1; };
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  auto read_uint = [&](const char* what) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(0, col(), what);
    return std::string(s.substr(start, pos - start));
  };
  std::vector<Rational> poly;
  auto add = [&](const Rational& c, long k) {
    if (k >= 1000000) throw ParseError(0, col(), "exponent below 10^6");
    if (poly.size() <= static_cast<size_t>(k)) poly.resize(k + 1);
    poly[k] += c;
  };
  skip();
  if (pos == s.size()) throw ParseError(0, col(), "scalar");
  bool first = true;
  while (true) {
    skip();
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError(0, col(), "'+' or '-'");
    }
    first = false;
    Rational c = 1;
    long k = 0;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      Integer num(read_uint("integer"));
      Integer den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = Integer(read_uint("denominator"));
        if (den == 0) throw ParseError(0, col() - 1, "non-zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip();
        if (pos >= s.size() || s[pos] != 'z') throw ParseError(0, col(), "'z'");
      } else {
        add(sign * c, 0);
        skip();
        if (pos == s.size()) break;
        continue;
      }
    }
    if (pos >= s.size() || s[pos] != 'z') throw ParseError(0, col(), "number or 'z'");
    ++pos;
    k = 1;
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      k = std::stol(read_uint("exponent"));
    }
    add(sign * c, k);
    skip();
    if (pos == s.size()) break;
  }
  return CycNum(order, poly);
}

CycNum root_of_unity(int n, int k, int field_order) {
  const long m = lcm_int(2, field_order);
  if (n <= 0 || m % n != 0)
    throw NonDivisibleOrders("root of unity of order " + std::to_string(n) + " is not in Q(zeta_" +
                             std::to_string(field_order) + ")");
  long j = ((static_cast<long>(k) * (m / n)) % m + m) % m;
  if (field_order % 2 == 0) return CycNum::zeta(field_order, j);
  // zeta_{2N} = -zeta_N^{(N+1)/2} for odd N
  CycNum base = CycNum::zeta(field_order, (j * ((field_order + 1) / 2)) % field_order);
  return (j % 2) ? -base : base;
}

long root_of_unity_log(const CycNum& x) {
  const int n = x.order();
  const long m = lcm_int(2, n);
  for (long k = 0; k < m; ++k)
    if (root_of_unity(static_cast<int>(m), static_cast<int>(k), n) == x) return k;
  return -1;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str() << " [Q(z_" << x.order() << ")]"; }

}  // namespace ydh
