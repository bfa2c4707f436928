#include "ydh/integrals.hpp"

#include "ydh/error.hpp"

namespace ydh {

namespace {

Vec trace_functional(const YDHopfAlgebra& a) {
  const int d = a.dim();
  Vec f = zero_vec(d, a.order());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) f[i] += a.mult()(i, k, k);
  return f;
}

CycNum eval(const Vec& f, const Vec& v) {
  CycNum s;
  for (size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero() && !v[i].is_zero()) s += f[i] * v[i];
  return s;
}

// lambda with (id (x) lambda)Delta(a) = lambda(a)1 = (lambda (x) id)Delta(a).
Vec solved_functional(const YDHopfAlgebra& a, const Vec& lambda_element) {
  const int d = a.dim(), n = a.order();
  // unknowns l_0..l_{d-1}; rows (side, k, r)
  Mat sys(2 * d * d, d, n);
  for (int k = 0; k < d; ++k) {
    for (const auto& [ij, c] : a.coproduct_terms(k)) {
      const int i = ij / d, j = ij % d;
      sys(k * d + i, j) += c;          // (id (x) lambda): b_i lambda(b_j)
      sys(d * d + k * d + j, i) += c;  // (lambda (x) id): lambda(b_i) b_j
    }
    for (int r = 0; r < d; ++r) {
      sys(k * d + r, k) -= a.unit()[r];
      sys(d * d + k * d + r, k) -= a.unit()[r];
    }
  }
  Mat ker = kernel(sys);
  if (ker.cols() != 1) throw NotUnique("integral functional space has dimension " + std::to_string(ker.cols()));
  Vec l = ker.col(0);
  CycNum at = eval(l, lambda_element);
  if (at.is_zero()) throw NotSemisimple("integral functional vanishes on the integral");
  return at.inverse() * l;
}

}  // namespace

IntegralPair compute_integrals(const YDHopfAlgebra& a) {
  const int d = a.dim(), n = a.order();
  Mat sys(2 * d * d, d, n);
  for (int i = 0; i < d; ++i) {
    Mat l = a.left_mult(i);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        sys(i * d + k, j) = l(k, j);
        if (k == j) sys(i * d + k, j) -= a.counit()[i];
      }
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : a.product_terms(j, i)) sys(d * d + i * d + k, j) += c;
    for (int k = 0; k < d; ++k) sys(d * d + i * d + k, k) -= a.counit()[i];
  }
  Mat ker = kernel(sys);
  if (ker.cols() != 1) throw NotUnique("integral space has dimension " + std::to_string(ker.cols()));
  Vec big = ker.col(0);
  CycNum e = a.counit_of(big);
  if (e.is_zero()) throw NotSemisimple("the counit vanishes on the integral");
  IntegralPair p{e.inverse() * big, trace_functional(a)};
  Vec solved = solved_functional(a, p.element);
  if (solved != p.functional) throw FormulaMismatch("trace functional differs from the solved integral functional");
  if (!eval(p.functional, p.element).is_one()) throw FormulaMismatch("lambda(Lambda) != 1");
  if (eval(p.functional, a.unit()) != CycNum(n, d)) throw FormulaMismatch("lambda(1) != dim A");
  return p;
}

CheckReport verify_integral_properties(const YDHopfAlgebra& a, const IntegralPair& p) {
  const int d = a.dim(), n = a.order();
  const Vec& big = p.element;
  const Vec& lam = p.functional;
  const Mat& s = a.antipode();
  CheckReport r;
  r.add("counit_of_integral", a.counit_of(big).is_one());
  r.add("functional_on_integral", eval(lam, big).is_one());
  r.add("functional_on_unit", eval(lam, a.unit()) == CycNum(n, d));
  r.add("antipode_fixes_integral", s.apply(big) == big);
  r.add("functional_antipode_invariant", s.apply_left(lam) == lam);

  Vec delta = a.coproduct(big);
  const size_t casimir = r.open("casimir_reconstruction");
  for (int k = 0; k < d; ++k) {
    Vec bk = unit_vec(d, k, n);
    Vec left = zero_vec(d, n), right = zero_vec(d, n);
    for (int ij = 0; ij < d * d; ++ij) {
      if (delta[ij].is_zero()) continue;
      const int i = ij / d, j = ij % d;
      Vec bi = unit_vec(d, i, n), bj = unit_vec(d, j, n);
      // lambda(a L1) S(L2) and S(L1) lambda(L2 a)
      CycNum l1 = delta[ij] * eval(lam, a.multiply(bk, bi));
      if (!l1.is_zero()) left = left + l1 * s.col(j);
      CycNum l2 = delta[ij] * eval(lam, a.multiply(bj, bk));
      if (!l2.is_zero()) right = right + l2 * s.col(i);
    }
    r.expect(casimir, left == bk && right == bk, {k});
  }
  // L1 (x) S(L2) = S(L1) (x) L2
  Vec one_s = zero_vec(d * d, n), s_one = zero_vec(d * d, n);
  Vec flipped = zero_vec(d * d, n);
  for (int ij = 0; ij < d * d; ++ij) {
    if (delta[ij].is_zero()) continue;
    const int i = ij / d, j = ij % d;
    one_s = one_s + delta[ij] * tensor_vec(unit_vec(d, i, n), s.col(j));
    s_one = s_one + delta[ij] * tensor_vec(s.col(i), unit_vec(d, j, n));
    flipped[j * d + i] += delta[ij];
  }
  r.add("casimir_forms", one_s == s_one);
  r.add("integral_cocommutative", flipped == delta);
  const size_t trace = r.open("functional_cocommutative");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec bi = unit_vec(d, i, n), bj = unit_vec(d, j, n);
      r.expect(trace, eval(lam, a.multiply(bi, bj)) == eval(lam, a.multiply(bj, bi)), {i, j});
    }
  return r;
}

Freeness check_freeness(const YDHopfAlgebra& a, const Mat& basis, const std::optional<YDModule>& module) {
  const int d = a.dim(), n = a.order();
  const int m = basis.cols();
  if (basis.rows() != d || m < 1 || rank(basis) != m) throw PreconditionViolated("B needs an independent basis in A");
  if (!in_span(basis, a.unit())) throw NotUnitalSubalgebra("1 is not in B");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!in_span(basis, a.multiply(basis.col(i), basis.col(j))))
        throw NotUnitalSubalgebra("B is not closed under multiplication");
  Mat bb = kron(basis, basis);
  for (int i = 0; i < m; ++i)
    if (!in_span(bb, a.coproduct(basis.col(i)))) throw NotSubcoalgebra("Delta(B) is not inside B (x) B");

  YDHopfAlgebra b = module ? sub_hopf_algebra(a, basis, *module) : sub_hopf_algebra(a, basis);
  if (!b.has_antipode()) b = b.with_antipode(solve_antipode(b));
  IntegralPair pa = compute_integrals(a);
  IntegralPair pb = compute_integrals(b);

  Freeness out;
  CheckReport& r = out.report;
  r.merge(verify_axioms(b), "subalgebra_");
  const CycNum ratio(n, Rational(d, m));
  const size_t restricts = r.open("functional_restricts");
  for (int i = 0; i < m; ++i) r.expect(restricts, eval(pa.functional, basis.col(i)) == ratio * pb.functional[i], {i});
  CycNum at = eval(pa.functional, basis.apply(pb.element));
  if (!at.is_rational() || at.rational_value().get_den() != 1 || at.rational_value() <= Rational(0))
    throw NonIntegralRank("lambda_A(Lambda_B) = " + at.str());
  r.add("rank_equals_ratio", at == ratio);
  out.rank = static_cast<int>(at.rational_value().get_num().get_si());
  r.add("rank_times_dim", out.rank * m == d);
  return out;
}

}  // namespace ydh
