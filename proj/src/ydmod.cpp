#include "ydh/ydmod.hpp"

#include "ydh/error.hpp"

namespace ydh {

ModSide opposite(ModSide s) { return s == ModSide::Left ? ModSide::Right : ModSide::Left; }

YDModule::YDModule(FinAbGroup g, int order, int dim, ModSide side, std::vector<Mat> phi_gens,
                   std::vector<Mat> psi_gens)
    : g_(std::move(g)), n_(order), d_(dim), side_(side) {
  build(std::move(phi_gens), std::move(psi_gens));
}

YDModule YDModule::trivial(const FinAbGroup& g, int order, int dim, ModSide side) {
  return YDModule(g, order, dim, side, {}, {});
}

void YDModule::build(std::vector<Mat> phi_gens, std::vector<Mat> psi_gens) {
  const int r = g_.rank();
  if (lcm_int(2, n_) % g_.exponent() != 0)
    throw NonDivisibleOrders("group exponent " + std::to_string(g_.exponent()) + " does not divide the field order");
  if (phi_gens.empty()) phi_gens.assign(r, Mat::identity(d_, n_));
  if (psi_gens.empty()) psi_gens.assign(r, Mat::identity(d_, n_));
  if (static_cast<int>(phi_gens.size()) != r || static_cast<int>(psi_gens.size()) != r)
    throw MalformedStructure("one matrix per group generator expected");
  for (const auto* gens : {&phi_gens, &psi_gens})
    for (const Mat& m : *gens)
      if (m.rows() != d_ || m.cols() != d_ || m.order() != n_)
        throw MalformedStructure("action matrix has wrong shape or field");
  const Mat id = Mat::identity(d_, n_);
  for (int i = 0; i < r; ++i) {
    Mat p = id, s = id;
    for (int k = 0; k < g_.factors()[i]; ++k) {
      p = p * phi_gens[i];
      s = s * psi_gens[i];
    }
    if (!p.is_identity()) throw MalformedStructure("phi generator " + std::to_string(i) + " has wrong order");
    if (!s.is_identity()) throw MalformedStructure("psi generator " + std::to_string(i) + " has wrong order");
    for (int j = 0; j < r; ++j) {
      if (j > i && !(phi_gens[i] * phi_gens[j] == phi_gens[j] * phi_gens[i]))
        throw MalformedStructure("phi generators do not commute");
      if (j > i && !(psi_gens[i] * psi_gens[j] == psi_gens[j] * psi_gens[i]))
        throw MalformedStructure("psi generators do not commute");
      if (!(phi_gens[i] * psi_gens[j] == psi_gens[j] * phi_gens[i]))
        throw MalformedStructure("phi and psi do not commute");
    }
  }
  const int ord = g_.order();
  phi_.assign(ord, id);
  psi_.assign(ord, id);
  // element index x: multiply in one generator on top of a smaller index
  for (int x = 1; x < ord; ++x) {
    auto e = g_.element(x);
    int i = r - 1;
    while (e[i] == 0) --i;
    e[i] -= 1;
    const int prev = g_.index(e);
    phi_[x] = phi_[prev] * phi_gens[i];
    psi_[x] = psi_[prev] * psi_gens[i];
  }
  auto chars = std::make_shared<std::vector<CycNum>>();
  chars->reserve(static_cast<size_t>(ord) * ord);
  for (int chi = 0; chi < ord; ++chi)
    for (int x = 0; x < ord; ++x) chars->push_back(g_.pairing(chi, x, n_));
  chars_ = chars;
  const CycNum inv_order(n_, Rational(1, ord));
  proj_.assign(ord, Mat(d_, d_, n_));
  for (int x = 0; x < ord; ++x) {
    Mat acc(d_, d_, n_);
    for (int chi = 0; chi < ord; ++chi) acc = acc + chi_value(chi, g_.neg(x)) * psi_[chi];
    proj_[x] = inv_order * acc;
  }
}

std::vector<Mat> YDModule::phi_generators() const {
  std::vector<Mat> out;
  for (int i = 0; i < g_.rank(); ++i) out.push_back(phi_[g_.generator(i)]);
  return out;
}

std::vector<Mat> YDModule::psi_generators() const {
  std::vector<Mat> out;
  for (int i = 0; i < g_.rank(); ++i) out.push_back(psi_[g_.generator(i)]);
  return out;
}

bool YDModule::phi_trivial() const {
  for (const Mat& m : phi_)
    if (!m.is_identity()) return false;
  return true;
}

bool YDModule::psi_trivial() const {
  for (const Mat& m : psi_)
    if (!m.is_identity()) return false;
  return true;
}

YDModule YDModule::with_side(ModSide s) const {
  YDModule out = *this;
  out.side_ = s;
  return out;
}

YDModule YDModule::swap_actions() const {
  return YDModule(g_, n_, d_, side_, psi_generators(), phi_generators());
}

Vec tensor_vec(const Vec& v, const Vec& w) {
  Vec out;
  out.reserve(v.size() * w.size());
  for (const auto& a : v)
    for (const auto& b : w) out.push_back(a.is_zero() || b.is_zero() ? CycNum(a.order()) : a * b);
  return out;
}

namespace {

void require_compatible(const YDModule& v, const YDModule& w) {
  if (!(v.group() == w.group()) || v.order() != w.order()) throw GroupMismatch("modules over different groups or fields");
  if (v.side() != w.side()) throw GroupMismatch("modules on different sides");
}

// (1/|G|) sum_chi chi(g)^s psi_chi with s = -1 (inverse = false) or +1.
Mat twisted_psi_sum(const YDModule& m, int g, bool inverse) {
  const FinAbGroup& grp = m.group();
  Mat acc(m.dim(), m.dim(), m.order());
  for (int chi = 0; chi < grp.order(); ++chi)
    acc = acc + m.chi_value(chi, inverse ? g : grp.neg(g)) * m.psi(chi);
  return CycNum(m.order(), Rational(1, grp.order())) * acc;
}

}  // namespace

Coaction coaction(const YDModule& m, const Vec& v) {
  Coaction out;
  for (int g = 0; g < m.group().order(); ++g) {
    Vec comp = twisted_psi_sum(m, g, false).apply(v);
    if (!is_zero(comp)) out.emplace_back(g, std::move(comp));
  }
  return out;
}

Vec psi_from_coaction(const YDModule& m, const Coaction& c, int chi) {
  Vec out = zero_vec(m.dim(), m.order());
  for (const auto& [g, comp] : c) out = out + m.chi_value(chi, g) * comp;
  return out;
}

Mat quasisymmetry(const YDModule& v, const YDModule& w) {
  require_compatible(v, w);
  const int a = v.dim(), b = w.dim();
  Mat acc(a * b, a * b, v.order());
  for (int g = 0; g < v.group().order(); ++g) {
    if (v.side() == ModSide::Left)
      acc = acc + kron(w.phi(g), twisted_psi_sum(v, g, false));
    else
      acc = acc + kron(twisted_psi_sum(w, g, false), v.phi(g));
  }
  return acc * flip(a, b, v.order());
}

Mat quasisymmetry_inverse(const YDModule& v, const YDModule& w) {
  require_compatible(v, w);
  const int a = v.dim(), b = w.dim();
  Mat acc(a * b, a * b, v.order());
  for (int g = 0; g < v.group().order(); ++g) {
    if (v.side() == ModSide::Left)
      acc = acc + kron(twisted_psi_sum(v, g, true), w.phi(g));
    else
      acc = acc + kron(v.phi(g), twisted_psi_sum(w, g, true));
  }
  return acc * flip(b, a, v.order());
}

Mat braiding(const YDModule& v, const YDModule& w) {
  require_compatible(v, w);
  const int a = v.dim(), b = w.dim();
  Mat acc(a * b, a * b, v.order());
  for (int g = 0; g < v.group().order(); ++g) {
    if (v.side() == ModSide::Left)
      acc = acc + kron(w.phi(g), v.degree_projection(g));
    else
      acc = acc + kron(w.degree_projection(g), v.phi(g));
  }
  return acc * flip(a, b, v.order());
}

Vec quasisymmetry_refined(const YDModule& vm, const YDModule& wm, const Vec& v, const Vec& w, const Subgroup& t,
                          const Subgroup& q) {
  require_compatible(vm, wm);
  if (t.side != Side::Group || q.side != Side::Dual || !(t.group == vm.group()) || !(q.group == vm.group()))
    throw GroupMismatch("refined quasisymmetry needs T in G and Q in the character group");
  const bool left = vm.side() == ModSide::Left;
  const YDModule& psi_side = left ? vm : wm;
  const Vec& psi_vec = left ? v : w;
  const YDModule& phi_side = left ? wm : vm;
  const Vec& phi_vec = left ? w : v;
  for (int chi : q.elems)
    if (!(psi_side.psi(chi).apply(psi_vec) == psi_vec)) throw PreconditionViolated("element not fixed by Q");
  for (int g : t.elems)
    if (!(phi_side.phi(g).apply(phi_vec) == phi_vec)) throw PreconditionViolated("element not fixed by T");
  const Subgroup qp = perp(q), tp = perp(t);
  const int n = vm.order();
  Vec acc = zero_vec(vm.dim() * wm.dim(), n);
  for (int g : qp.elems) {
    const Vec moved = phi_side.phi(g).apply(phi_vec);
    Vec twisted = zero_vec(psi_side.dim(), n);
    for (int chi : tp.elems) twisted = twisted + vm.chi_value(chi, vm.group().neg(g)) * psi_side.psi(chi).apply(psi_vec);
    acc = acc + (left ? tensor_vec(moved, twisted) : tensor_vec(twisted, moved));
  }
  const long denom = static_cast<long>(qp.order()) * intersect(q, tp).order();
  return CycNum(n, Rational(1, denom)) * acc;
}

YDModule tensor(const YDModule& v, const YDModule& w) {
  require_compatible(v, w);
  std::vector<Mat> phi, psi;
  auto pv = v.phi_generators(), pw = w.phi_generators();
  auto sv = v.psi_generators(), sw = w.psi_generators();
  for (size_t i = 0; i < pv.size(); ++i) {
    phi.push_back(kron(pv[i], pw[i]));
    psi.push_back(kron(sv[i], sw[i]));
  }
  return YDModule(v.group(), v.order(), v.dim() * w.dim(), v.side(), phi, psi);
}

YDModule dual(const YDModule& v) {
  std::vector<Mat> phi, psi;
  for (const Mat& m : v.phi_generators()) phi.push_back(m.transpose());
  for (const Mat& m : v.psi_generators()) psi.push_back(m.transpose());
  return YDModule(v.group(), v.order(), v.dim(), opposite(v.side()), phi, psi);
}

GroupChange restrict_group(const YDModule& v, const Subgroup& t, const Subgroup& q) {
  const FinAbGroup& g = v.group();
  if (t.side != Side::Group || q.side != Side::Dual || !(t.group == g) || !(q.group == g))
    throw GroupMismatch("change of groups needs T in G and Q in the character group");
  for (int x : t.elems)
    if (!v.phi(x).is_identity()) throw PreconditionViolated("T does not act trivially");
  for (int chi : q.elems)
    if (!v.psi(chi).is_identity()) throw PreconditionViolated("Q does not act trivially");
  const Subgroup qp = perp(q), tp = perp(t);
  Quotient quo = quotient(qp, intersect(t, qp));
  std::vector<int> lift(quo.group.order(), -1);
  for (int gamma : tp.elems) {
    int chi = induced_character(g, quo, gamma);
    if (lift[chi] < 0) lift[chi] = gamma;
  }
  for (int x : lift)
    if (x < 0) throw TheoremViolation("characters of the index group not all induced");
  std::vector<Mat> phi, psi;
  for (int i = 0; i < quo.group.rank(); ++i) {
    phi.push_back(v.phi(quo.lifts[i]));
    psi.push_back(v.psi(lift[quo.group.generator(i)]));
  }
  YDModule m(quo.group, v.order(), v.dim(), v.side(), phi, psi);
  return GroupChange{std::move(m), std::move(quo), std::move(lift)};
}

}  // namespace ydh
