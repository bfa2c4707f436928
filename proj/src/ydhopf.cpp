#include "ydh/ydhopf.hpp"

#include <functional>

#include "ydh/error.hpp"

namespace ydh {

namespace {

Terms to_terms(const Vec& v) {
  Terms t;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) t.emplace_back(i, v[i]);
  return t;
}

void add_scaled(Vec& acc, const CycNum& s, const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += s * v[i];
}

// (m (x) n) x for x in K^a (x) K^b.
Vec apply_pair(const Mat& m, const Mat& n, const Vec& x) {
  const int a = m.cols(), b = n.cols();
  Vec out = zero_vec(m.rows() * n.rows(), m.order());
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      const CycNum& c = x[static_cast<size_t>(i) * b + j];
      if (c.is_zero()) continue;
      add_scaled(out, c, tensor_vec(m.col(i), n.col(j)));
    }
  return out;
}

std::vector<std::string> default_names(int d) {
  std::vector<std::string> n;
  for (int i = 0; i < d; ++i) n.push_back("b" + std::to_string(i));
  return n;
}

}  // namespace

YDHopfAlgebra::YDHopfAlgebra(YDModule module, Tensor3 mult, Vec unit, Tensor3 comult, Vec counit,
                             std::optional<Mat> antipode, std::vector<std::string> names)
    : module_(std::move(module)),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      names_(std::move(names)) {
  const int d = module_.dim();
  auto cube = [d](const Tensor3& t) { return t.dim(0) == d && t.dim(1) == d && t.dim(2) == d; };
  if (d < 1) throw MalformedStructure("dimension must be positive");
  if (!cube(mult_)) throw MalformedStructure("multiplication tensor must be d x d x d");
  if (!cube(comult_)) throw MalformedStructure("comultiplication tensor must be d x d x d");
  if (static_cast<int>(unit_.size()) != d) throw MalformedStructure("unit must have length d");
  if (static_cast<int>(counit_.size()) != d) throw MalformedStructure("counit must have length d");
  if (antipode_ && (antipode_->rows() != d || antipode_->cols() != d))
    throw MalformedStructure("antipode must be d x d");
  if (names_.empty()) names_ = default_names(d);
  if (static_cast<int>(names_.size()) != d) throw MalformedStructure("need one name per basis element");

  const int n = module_.order();
  auto fits = [n](const CycNum& x) { return x.is_zero() || n % x.order() == 0; };
  mult_terms_.assign(static_cast<size_t>(d) * d, {});
  comult_terms_.assign(d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (!fits(mult_(i, j, k)) || !fits(comult_(k, i, j)))
          throw MalformedStructure("structure constant outside Q(zeta_" + std::to_string(n) + ")");
        if (!mult_(i, j, k).is_zero()) mult_terms_[static_cast<size_t>(i) * d + j].emplace_back(k, mult_(i, j, k));
        if (!comult_(k, i, j).is_zero()) comult_terms_[k].emplace_back(i * d + j, comult_(k, i, j));
      }

  // left: sigma(b_i (x) b_j) = sum_g phi_g(b_j) (x) P_g(b_i)
  // right: sigma(b_i (x) b_j) = sum_g P_g(b_j) (x) phi_g(b_i)
  sigma_terms_.assign(static_cast<size_t>(d) * d, {});
  const bool left = module_.side() == ModSide::Left;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec acc = zero_vec(d * d, n);
      for (int g = 0; g < module_.group().order(); ++g) {
        Vec p = module_.degree_projection(g).col(left ? i : j);
        if (is_zero(p)) continue;
        Vec f = module_.phi(g).col(left ? j : i);
        acc = acc + (left ? tensor_vec(f, p) : tensor_vec(p, f));
      }
      sigma_terms_[static_cast<size_t>(i) * d + j] = to_terms(acc);
    }
}

const Mat& YDHopfAlgebra::antipode() const {
  if (!antipode_) throw PreconditionViolated("antipode not available");
  return *antipode_;
}

YDHopfAlgebra YDHopfAlgebra::with_antipode(Mat s) const {
  return YDHopfAlgebra(module_, mult_, unit_, comult_, counit_, std::move(s), names_);
}

YDHopfAlgebra YDHopfAlgebra::with_module(YDModule m) const {
  if (m.dim() != dim()) throw DimensionMismatch("module dimension differs from the algebra");
  return YDHopfAlgebra(std::move(m), mult_, unit_, comult_, counit_, antipode_, names_);
}

Vec YDHopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  const int d = dim();
  Vec out = zero_vec(d, order());
  for (int i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      CycNum s = a[i] * b[j];
      for (const auto& [k, c] : product_terms(i, j)) out[k] += s * c;
    }
  }
  return out;
}

Vec YDHopfAlgebra::coproduct(const Vec& a) const {
  const int d = dim();
  Vec out = zero_vec(d * d, order());
  for (int k = 0; k < d; ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& [ij, c] : coproduct_terms(k)) out[ij] += a[k] * c;
  }
  return out;
}

CycNum YDHopfAlgebra::counit_of(const Vec& a) const {
  CycNum s(order());
  for (int i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Vec YDHopfAlgebra::apply_antipode(const Vec& a) const { return antipode().apply(a); }

Vec YDHopfAlgebra::braid(const Vec& x) const {
  const int d = dim();
  Vec out = zero_vec(d * d, order());
  for (int ij = 0; ij < d * d; ++ij) {
    if (x[ij].is_zero()) continue;
    for (const auto& [pq, c] : sigma_terms_[ij]) out[pq] += x[ij] * c;
  }
  return out;
}

Vec YDHopfAlgebra::tensor_multiply(const Vec& x, const Vec& y) const {
  const int d = dim();
  Vec out = zero_vec(d * d, order());
  for (int ab = 0; ab < d * d; ++ab) {
    if (x[ab].is_zero()) continue;
    for (int ce = 0; ce < d * d; ++ce) {
      if (y[ce].is_zero()) continue;
      CycNum s = x[ab] * y[ce];
      for (const auto& [p, c1] : product_terms(ab / d, ce / d))
        for (const auto& [q, c2] : product_terms(ab % d, ce % d)) out[p * d + q] += s * c1 * c2;
    }
  }
  return out;
}

Vec YDHopfAlgebra::smash_multiply(const Vec& x, const Vec& y) const {
  const int d = dim();
  Vec out = zero_vec(d * d, order());
  for (int ab = 0; ab < d * d; ++ab) {
    if (x[ab].is_zero()) continue;
    const int a = ab / d, b = ab % d;
    for (int ce = 0; ce < d * d; ++ce) {
      if (y[ce].is_zero()) continue;
      const int c = ce / d, e = ce % d;
      CycNum s = x[ab] * y[ce];
      for (const auto& [pq, t] : braid_terms(b, c)) {
        CycNum st = s * t;
        for (const auto& [u, c1] : product_terms(a, pq / d))
          for (const auto& [v, c2] : product_terms(pq % d, e)) out[u * d + v] += st * c1 * c2;
      }
    }
  }
  return out;
}

Mat YDHopfAlgebra::left_mult(int i) const {
  const int d = dim();
  Mat m(d, d, order());
  for (int j = 0; j < d; ++j)
    for (const auto& [k, c] : product_terms(i, j)) m(k, j) = c;
  return m;
}

namespace {

void check_linearity(AxiomReport& ck, const YDHopfAlgebra& a, const std::string& prefix, const std::vector<Mat>& ops) {
  const int d = a.dim();
  const int n = a.order();
  const size_t mult = ck.open(prefix + "_mult");
  const size_t unit = ck.open(prefix + "_unit");
  const size_t comult = ck.open(prefix + "_comult");
  const size_t counit = ck.open(prefix + "_counit");
  const size_t anti = ck.open(prefix + "_antipode");
  for (int g = 0; g < static_cast<int>(ops.size()); ++g) {
    const Mat& f = ops[g];
    ck.expect(unit, f.apply(a.unit()) == a.unit(), {g});
    for (int i = 0; i < d; ++i) {
      Vec bi = unit_vec(d, i, n);
      Vec fi = f.col(i);
      for (int j = 0; j < d; ++j) {
        Vec lhs = f.apply(a.multiply(bi, unit_vec(d, j, n)));
        ck.expect(mult, lhs == a.multiply(fi, f.col(j)), {g, i, j});
      }
      ck.expect(comult, a.coproduct(fi) == apply_pair(f, f, a.coproduct(bi)), {g, i});
      ck.expect(counit, a.counit_of(fi) == a.counit()[i], {g, i});
      if (a.has_antipode()) ck.expect(anti, a.apply_antipode(fi) == f.apply(a.antipode().col(i)), {g, i});
    }
  }
  if (!a.has_antipode()) ck.expect(anti, false, {}, "no antipode");
}

}  // namespace

AxiomReport verify_axioms(const YDHopfAlgebra& input) {
  AxiomReport report;
  AxiomReport& ck = report;
  YDHopfAlgebra a = input;
  std::string antipode_error;
  if (!a.has_antipode()) {
    try {
      a = a.with_antipode(solve_antipode(a));
    } catch (const Error& e) {
      antipode_error = e.what();
    }
  }
  const int d = a.dim();
  const int n = a.order();
  const YDModule& m = a.module();
  auto basis = [d, n](int i) { return unit_vec(d, i, n); };

  const size_t yd = ck.open("yd_compatibility");
  {
    auto ph = m.phi_generators(), ps = m.psi_generators();
    for (size_t g = 0; g < ph.size(); ++g)
      for (size_t c = 0; c < ps.size(); ++c)
        ck.expect(yd, ph[g] * ps[c] == ps[c] * ph[g], {static_cast<int>(g), static_cast<int>(c)});
  }

  const size_t unit = ck.open("unit");
  for (int i = 0; i < d; ++i)
    ck.expect(unit, a.multiply(a.unit(), basis(i)) == basis(i) && a.multiply(basis(i), a.unit()) == basis(i), {i});

  const size_t assoc = ck.open("associativity");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ij = a.multiply(basis(i), basis(j));
      for (int k = 0; k < d; ++k) {
        Vec jk = a.multiply(basis(j), basis(k));
        ck.expect(assoc, a.multiply(ij, basis(k)) == a.multiply(basis(i), jk), {i, j, k});
      }
    }

  const size_t counit = ck.open("counit");
  const size_t coassoc = ck.open("coassociativity");
  for (int k = 0; k < d; ++k) {
    Vec dk = a.coproduct(basis(k));
    Vec left = zero_vec(d, n), right = zero_vec(d, n);
    Vec l3 = zero_vec(d * d * d, n), r3 = zero_vec(d * d * d, n);
    for (const auto& [ij, c] : a.coproduct_terms(k)) {
      const int i = ij / d, j = ij % d;
      left[j] += c * a.counit()[i];
      right[i] += c * a.counit()[j];
      add_scaled(l3, c, tensor_vec(a.coproduct(basis(i)), basis(j)));
      add_scaled(r3, c, tensor_vec(basis(i), a.coproduct(basis(j))));
    }
    ck.expect(counit, left == basis(k) && right == basis(k), {k});
    ck.expect(coassoc, l3 == r3, {k});
  }

  check_linearity(ck, a, "phi_linear", m.phi_generators());
  check_linearity(ck, a, "psi_colinear", m.psi_generators());

  const size_t eps_mult = ck.open("counit_multiplicative");
  ck.expect(eps_mult, a.counit_of(a.unit()).is_one(), {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      ck.expect(eps_mult, a.counit_of(a.multiply(basis(i), basis(j))) == a.counit()[i] * a.counit()[j], {i, j});

  const size_t delta_unit = ck.open("comult_unital");
  ck.expect(delta_unit, a.coproduct(a.unit()) == tensor_vec(a.unit(), a.unit()), {});

  const size_t delta_mult = ck.open("comult_multiplicative");
  {
    std::vector<Vec> deltas;
    for (int i = 0; i < d; ++i) deltas.push_back(a.coproduct(basis(i)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        ck.expect(delta_mult,
                        a.coproduct(a.multiply(basis(i), basis(j))) == a.smash_multiply(deltas[i], deltas[j]), {i, j});
  }

  const size_t anti = ck.open("antipode");
  const size_t anti_mu = ck.open("antipode_anti_multiplicative", true);
  const size_t anti_delta = ck.open("antipode_anti_comultiplicative", true);
  const size_t anti_unit = ck.open("antipode_unit_counit", true);
  if (!a.has_antipode()) {
    for (size_t c : {anti, anti_mu, anti_delta, anti_unit}) ck.expect(c, false, {}, antipode_error);
  } else {
    const Mat& s = a.antipode();
    for (int k = 0; k < d; ++k) {
      Vec l = zero_vec(d, n), r = zero_vec(d, n);
      for (const auto& [ij, c] : a.coproduct_terms(k)) {
        const int i = ij / d, j = ij % d;
        add_scaled(l, c, a.multiply(s.col(i), basis(j)));
        add_scaled(r, c, a.multiply(basis(i), s.col(j)));
      }
      Vec expect = a.counit()[k] * a.unit();
      ck.expect(anti, l == expect && r == expect, {k});
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec rhs = zero_vec(d, n);
        for (const auto& [pq, c] : a.braid_terms(i, j)) add_scaled(rhs, c, a.multiply(s.col(pq / d), s.col(pq % d)));
        ck.expect(anti_mu, s.apply(a.multiply(basis(i), basis(j))) == rhs, {i, j});
      }
    for (int k = 0; k < d; ++k) {
      Vec lhs = a.coproduct(s.col(k));
      Vec rhs = a.braid(apply_pair(s, s, a.coproduct(basis(k))));
      ck.expect(anti_delta, lhs == rhs, {k});
    }
    ck.expect(anti_unit, s.apply(a.unit()) == a.unit(), {});
    for (int i = 0; i < d; ++i) ck.expect(anti_unit, a.counit_of(s.col(i)) == a.counit()[i], {i});
  }
  return report;
}

Triviality is_trivial(const YDHopfAlgebra& a) {
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Terms& t = a.braid_terms(i, j);
      if (t.size() != 1 || t[0].first != j * d + i || !t[0].second.is_one()) return Triviality{false, std::pair{i, j}};
    }
  return {};
}

YDHopfAlgebra dualize(const YDHopfAlgebra& a) {
  const int d = a.dim();
  Tensor3 mult(d, d, d, a.order()), comult(d, d, d, a.order());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        mult(i, j, k) = a.comult()(k, i, j);
        comult(k, i, j) = a.mult()(i, j, k);
      }
  std::optional<Mat> s;
  if (a.has_antipode()) s = a.antipode().transpose();
  std::vector<std::string> names;
  for (const auto& nm : a.basis_names()) names.push_back(nm.size() > 1 && nm.back() == '*' ? nm.substr(0, nm.size() - 1) : nm + "*");
  return YDHopfAlgebra(dual(a.module()), mult, a.counit(), comult, a.unit(), s, names);
}

YDHopfAlgebra op_cop(const YDHopfAlgebra& a) {
  const int d = a.dim();
  Tensor3 mult(d, d, d, a.order()), comult(d, d, d, a.order());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        mult(i, j, k) = a.mult()(j, i, k);
        comult(k, i, j) = a.comult()(k, j, i);
      }
  std::optional<Mat> s;
  if (a.has_antipode()) s = a.antipode();
  return YDHopfAlgebra(a.module().with_side(opposite(a.side())), mult, a.unit(), comult, a.counit(), s,
                       a.basis_names());
}

YDHopfAlgebra to_left_over_dual(const YDHopfAlgebra& a) {
  if (a.side() != ModSide::Right) throw PreconditionViolated("base swap expects a right structure");
  return a.with_module(a.module().swap_actions().with_side(ModSide::Left));
}

YDHopfAlgebra change_group(const YDHopfAlgebra& a, const Subgroup& t, const Subgroup& q) {
  return a.with_module(restrict_group(a.module(), t, q).module);
}

Mat solve_antipode(const YDHopfAlgebra& a) {
  const int d = a.dim();
  const int n = a.order();
  // x[i*d + p] is the coefficient of b_p in S(b_i); equation (k, r) reads: sum_{i,j} comult(k,i,j) sum_p x[i*d+p] mult(p,j,r) = eps_k 1_r
  Mat sys(d * d, d * d, n), rhs(d * d, 1, n);
  for (int k = 0; k < d; ++k) {
    for (const auto& [ij, c] : a.coproduct_terms(k)) {
      const int i = ij / d, j = ij % d;
      for (int p = 0; p < d; ++p)
        for (const auto& [r, m] : a.product_terms(p, j)) sys(k * d + r, i * d + p) += c * m;
    }
    for (int r = 0; r < d; ++r) rhs(k * d + r, 0) = a.counit()[k] * a.unit()[r];
  }
  if (rank(sys) != d * d) throw NoAntipode("convolution inverse of the identity is not unique");
  Mat x;
  try {
    x = solve(sys, rhs);
  } catch (const NotInSpan&) {
    throw NoAntipode("antipode system is inconsistent");
  }
  Mat s(d, d, n);
  for (int i = 0; i < d; ++i)
    for (int p = 0; p < d; ++p) s(p, i) = x(i * d + p, 0);

  // right-sided identity
  for (int k = 0; k < d; ++k) {
    Vec r = zero_vec(d, n);
    for (const auto& [ij, c] : a.coproduct_terms(k)) add_scaled(r, c, a.multiply(unit_vec(d, ij / d, n), s.col(ij % d)));
    if (r != a.counit()[k] * a.unit()) throw NoAntipode("left convolution inverse is not a right inverse");
  }
  if (rank(s) != d) throw NoAntipode("solved antipode is not bijective");
  for (const auto& f : a.module().phi_generators())
    if (!(f * s == s * f)) throw NotColinear("antipode does not commute with the action");
  for (const auto& f : a.module().psi_generators())
    if (!(f * s == s * f)) throw NotColinear("antipode does not commute with the coaction");
  return s;
}

YDHopfAlgebra extend_field(const YDHopfAlgebra& a, int order) {
  if (order < 1 || order % a.order() != 0) throw NonDivisibleOrders("field order must be a multiple of the current one");
  const int d = a.dim();
  auto lift = [&](const Mat& m) {
    Mat r(m.rows(), m.cols(), order);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).embed(order);
    return r;
  };
  std::vector<Mat> phi, psi;
  for (const Mat& m : a.module().phi_generators()) phi.push_back(lift(m));
  for (const Mat& m : a.module().psi_generators()) psi.push_back(lift(m));
  Tensor3 mult(d, d, d, order), comult(d, d, d, order);
  Vec unit, counit;
  for (int i = 0; i < d; ++i) {
    unit.push_back(a.unit()[i].embed(order));
    counit.push_back(a.counit()[i].embed(order));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        mult(i, j, k) = a.mult()(i, j, k).embed(order);
        comult(i, j, k) = a.comult()(i, j, k).embed(order);
      }
  }
  std::optional<Mat> s;
  if (a.has_antipode()) s = lift(a.antipode());
  return YDHopfAlgebra(YDModule(a.group(), order, d, a.side(), phi, psi), mult, unit, comult, counit, s,
                       a.basis_names());
}

YDHopfAlgebra change_basis(const YDHopfAlgebra& a, const Mat& p, std::vector<std::string> names) {
  if (p.rows() != a.dim() || p.cols() != a.dim() || rank(p) != a.dim())
    throw PreconditionViolated("change of basis needs an invertible d x d matrix");
  return sub_hopf_algebra(a, p, std::move(names));
}

namespace {

YDHopfAlgebra sub_impl(const YDHopfAlgebra& a, const Mat& basis, const YDModule* module,
                       std::vector<std::string> names) {
  const int d = a.dim();
  const int n = a.order();
  const int m = basis.cols();
  if (basis.rows() != d) throw DimensionMismatch("basis vectors must live in A");
  if (rank(basis) != m) throw PreconditionViolated("basis vectors must be independent");
  // left inverse through m independent rows
  RREF rr = rref(basis.transpose());
  Mat sub(m, m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) sub(r, c) = basis(rr.pivots[r], c);
  Mat sub_inv = inverse(sub);
  Mat left(m, d, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) left(r, rr.pivots[c]) = sub_inv(r, c);

  auto coords_of = [&](const Vec& v, const char* what, std::vector<int> w) {
    Vec c = left.apply(v);
    if (basis.apply(c) != v) {
      std::string msg = std::string(what) + " leaves the span at";
      for (int x : w) msg += " " + std::to_string(x);
      throw ClosureFailure(msg);
    }
    return c;
  };
  auto coords2_of = [&](const Vec& v, const char* what, std::vector<int> w) {
    Vec c = apply_pair(left, left, v);
    if (apply_pair(basis, basis, c) != v) {
      std::string msg = std::string(what) + " leaves the span at";
      for (int x : w) msg += " " + std::to_string(x);
      throw ClosureFailure(msg);
    }
    return c;
  };

  Tensor3 mult(m, m, m, n), comult(m, m, m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec c = coords_of(a.multiply(basis.col(i), basis.col(j)), "multiplication", {i, j});
      for (int k = 0; k < m; ++k) mult(i, j, k) = c[k];
    }
  for (int k = 0; k < m; ++k) {
    Vec c = coords2_of(a.coproduct(basis.col(k)), "comultiplication", {k});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) comult(k, i, j) = c[static_cast<size_t>(i) * m + j];
  }
  Vec unit = coords_of(a.unit(), "unit", {});
  Vec counit;
  for (int i = 0; i < m; ++i) counit.push_back(a.counit_of(basis.col(i)));

  auto restrict_op = [&](const Mat& f, const char* what) {
    Mat out(m, m, n);
    for (int i = 0; i < m; ++i) {
      Vec c = coords_of(f.apply(basis.col(i)), what, {i});
      for (int r = 0; r < m; ++r) out(r, i) = c[r];
    }
    return out;
  };
  std::optional<Mat> s;
  if (a.has_antipode()) s = restrict_op(a.antipode(), "antipode");
  if (module) {
    if (module->dim() != m) throw DimensionMismatch("module dimension differs from the span");
    return YDHopfAlgebra(*module, mult, unit, comult, counit, s, std::move(names));
  }
  std::vector<Mat> phi, psi;
  for (const auto& f : a.module().phi_generators()) phi.push_back(restrict_op(f, "action"));
  for (const auto& f : a.module().psi_generators()) psi.push_back(restrict_op(f, "coaction"));
  YDModule mod(a.group(), n, m, a.side(), phi, psi);
  return YDHopfAlgebra(mod, mult, unit, comult, counit, s, std::move(names));
}

}  // namespace

YDHopfAlgebra sub_hopf_algebra(const YDHopfAlgebra& a, const Mat& basis, std::vector<std::string> names) {
  return sub_impl(a, basis, nullptr, std::move(names));
}

YDHopfAlgebra sub_hopf_algebra(const YDHopfAlgebra& a, const Mat& basis, const YDModule& module,
                               std::vector<std::string> names) {
  return sub_impl(a, basis, &module, std::move(names));
}

CycNum pair_tensor(const Vec& x, const Vec& f) {
  if (x.size() != f.size()) throw DimensionMismatch("pairing needs equal lengths");
  CycNum s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !f[i].is_zero()) s += x[i] * f[i];
  return s;
}

}  // namespace ydh
