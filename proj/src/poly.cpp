#include "ydh/poly.hpp"

#include <algorithm>

#include "ydh/error.hpp"

namespace ydh {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const Rational& lb = b.back();
  for (int i = deg(r); i >= deg(b); --i) {
    Rational c = r[i] / lb;
    q[i - deg(b)] = c;
    if (sgn(c) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i - deg(b) + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly q_monic(const QPoly& p) {
  if (p.empty()) return p;
  QPoly r = p;
  Rational l = p.back();
  for (auto& c : r) c /= l;
  return r;
}

QPoly q_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = q_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return q_monic(a);
}

QPoly q_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
  QPoly p = f;
  trim(p);
  if (p.empty()) throw PreconditionViolated("factor of zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  // Yun over Q
  QPoly d = q_derivative(p);
  QPoly a = q_gcd(p, d);
  QPoly b = q_divrem(p, a).first;
  QPoly c = q_divrem(d, a).first;
  int i = 1;
  while (deg(b) > 0) {
    QPoly e = q_sub(c, q_derivative(b));
    QPoly g = q_gcd(b, e);
    if (deg(g) > 0)
      for (auto& h : factor_squarefree_rational(g)) out.emplace_back(h, i);
    b = q_divrem(b, g).first;
    c = q_divrem(e, g).first;
    ++i;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.begin(), x.first.end(), y.first.begin(), y.first.end());
  });
  return out;
}

CycPoly::CycPoly(std::vector<CycNum> c) : c_(std::move(c)) { trim(); }

void CycPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::from_rational(const QPoly& p, int order) {
  std::vector<CycNum> c;
  for (const auto& q : p) c.emplace_back(order, q);
  return CycPoly(std::move(c));
}

CycPoly CycPoly::x_minus(const CycNum& r) { return CycPoly({-r, CycNum(r.order(), 1)}); }

bool CycPoly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycNum& x) { return x.is_rational(); });
}

QPoly CycPoly::to_rational() const {
  QPoly q;
  for (const auto& x : c_) q.push_back(x.rational_value());
  return q;
}

CycNum CycPoly::eval(const CycNum& x) const {
  CycNum acc(x.order());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

CycPoly CycPoly::derivative() const {
  std::vector<CycNum> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * CycNum(1, static_cast<long>(i)));
  return CycPoly(std::move(d));
}

CycPoly CycPoly::monic() const {
  if (c_.empty()) return *this;
  CycNum inv = c_.back().inverse();
  std::vector<CycNum> r;
  for (const auto& x : c_) r.push_back(x * inv);
  return CycPoly(std::move(r));
}

CycPoly CycPoly::compose_shift(const CycNum& s) const {
  // Horner in polynomial arithmetic: p(x+s)
  CycPoly shift({s, CycNum(s.order(), 1)});
  CycPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * shift + CycPoly({c_[i]});
  return acc;
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
  std::vector<CycNum> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return CycPoly(std::move(r));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) {
  std::vector<CycNum> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return CycPoly(std::move(r));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<CycNum> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return CycPoly(std::move(r));
}

std::pair<CycPoly, CycPoly> CycPoly::divrem(const CycPoly& a, const CycPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<CycNum> r = a.c_;
  if (r.size() < b.c_.size()) return {CycPoly(), a};
  std::vector<CycNum> q(r.size() - b.c_.size() + 1);
  CycNum inv = b.lead().inverse();
  const int db = b.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i].is_zero()) continue;
    CycNum c = r[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.c_[j];
  }
  return {CycPoly(std::move(q)), CycPoly(std::move(r))};
}

CycPoly CycPoly::gcd(CycPoly a, CycPoly b) {
  while (!b.is_zero()) {
    CycPoly r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<CycPoly, int>> squarefree_decomposition(const CycPoly& p) {
  if (p.is_zero()) throw PreconditionViolated("squarefree decomposition of zero");
  std::vector<std::pair<CycPoly, int>> out;
  CycPoly d = p.derivative();
  CycPoly a = CycPoly::gcd(p, d);
  CycPoly b = CycPoly::divrem(p, a).first;
  CycPoly c = CycPoly::divrem(d, a).first;
  int i = 1;
  while (b.degree() > 0) {
    CycPoly e = c - b.derivative();
    CycPoly g = CycPoly::gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = CycPoly::divrem(b, g).first;
    c = CycPoly::divrem(e, g).first;
    ++i;
  }
  return out;
}

QPoly norm_polynomial(const CycPoly& p, int order) {
  const int phi = euler_phi(order);
  const int d = p.degree() * phi;
  if (p.degree() <= 0) {
    QPoly r;
    if (!p.is_zero()) r.push_back(p.lead().embed(order).norm());
    return r;
  }
  // Interpolate through x = 0..d (Newton divided differences).
  std::vector<Rational> xs(d + 1), ys(d + 1);
  for (int i = 0; i <= d; ++i) {
    xs[i] = i;
    ys[i] = p.eval(CycNum(order, static_cast<long>(i))).embed(order).norm();
  }
  std::vector<Rational> coef = ys;
  for (int j = 1; j <= d; ++j)
    for (int i = d; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  QPoly result{coef[d]};
  for (int i = d - 1; i >= 0; --i) {
    QPoly shifted(result.size() + 1);
    for (size_t k = 0; k < result.size(); ++k) {
      shifted[k + 1] += result[k];
      shifted[k] -= result[k] * xs[i];
    }
    shifted[0] += coef[i];
    result = std::move(shifted);
  }
  trim(result);
  return result;
}

namespace {

// Roots of a squarefree polynomial over Q(zeta_N) by Trager's norm method.
std::vector<CycNum> roots_squarefree(const CycPoly& f, int order) {
  std::vector<CycNum> roots;
  if (f.degree() <= 0) return roots;
  if (f.degree() == 1) {
    roots.push_back((-f.coeffs()[0] / f.coeffs()[1]).embed(order));
    return roots;
  }
  const int phi = euler_phi(order);
  if (f.is_rational()) {
    for (const QPoly& g : factor_squarefree_rational(f.to_rational(), phi)) {
      if (deg(g) == 1) {
        roots.emplace_back(order, -g[0]);
      } else if (deg(g) <= phi && phi % deg(g) == 0 && phi > 1) {
        // only irreducible pieces are returned below the cap
        for (auto& r : roots_squarefree(CycPoly::from_rational(g, order).compose_shift(CycNum::zeta(order)), order))
          roots.push_back(r + CycNum::zeta(order));
      }
    }
    return roots;
  }
  const CycNum z = CycNum::zeta(order);
  for (long s = 0;; s = (s <= 0) ? 1 - s : -s) {
    // q(x) = f(x + shift); its roots are r - shift
    CycNum shift = z * CycNum(order, -s);
    CycPoly q = f.compose_shift(shift);
    QPoly nm = norm_polynomial(q, order);
    if (deg(q_gcd(nm, q_derivative(nm))) > 0) continue;
    for (const QPoly& h : factor_squarefree_rational(nm, phi)) {
      if (deg(h) > phi || phi % deg(h) != 0) continue;
      CycPoly g = CycPoly::gcd(q, CycPoly::from_rational(h, order));
      if (g.degree() == 1) roots.push_back(-g.coeffs()[0] + shift);
    }
    return roots;
  }
}

}  // namespace

std::vector<Root> roots_in_field(const CycPoly& p, int order) {
  if (p.is_zero()) throw PreconditionViolated("roots of the zero polynomial");
  for (const auto& c : p.coeffs())
    if (order % c.order() != 0) throw NonDivisibleOrders("coefficient outside Q(zeta_" + std::to_string(order) + ")");
  std::vector<Root> out;
  for (const auto& [f, mult] : squarefree_decomposition(p))
    for (auto& r : roots_squarefree(f, order)) out.push_back({r.embed(order), mult});
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return out;
}

}  // namespace ydh
