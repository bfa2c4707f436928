#include "ydh/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ydh/error.hpp"

namespace ydh {

FinAbGroup::FinAbGroup(std::vector<int> factors) {
  for (int n : factors) {
    if (n < 1) throw PreconditionViolated("cyclic factor must be positive");
    if (n > 1) factors_.push_back(n);
  }
  stride_.assign(factors_.size(), 1);
  order_ = 1;
  exponent_ = 1;
  for (size_t i = factors_.size(); i-- > 0;) {
    stride_[i] = order_;
    order_ *= factors_[i];
    exponent_ = static_cast<int>(std::lcm(exponent_, factors_[i]));
  }
}

int FinAbGroup::index(const Elem& e) const {
  if (e.size() != factors_.size()) throw DimensionMismatch("element has wrong rank");
  int idx = 0;
  for (size_t i = 0; i < e.size(); ++i) idx += (((e[i] % factors_[i]) + factors_[i]) % factors_[i]) * stride_[i];
  return idx;
}

FinAbGroup::Elem FinAbGroup::element(int idx) const {
  Elem e(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    e[i] = idx / stride_[i];
    idx %= stride_[i];
  }
  return e;
}

int FinAbGroup::add(int a, int b) const {
  Elem x = element(a), y = element(b);
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

int FinAbGroup::neg(int a) const {
  Elem x = element(a);
  for (auto& v : x) v = -v;
  return index(x);
}

int FinAbGroup::scale(int a, long k) const {
  Elem x = element(a);
  for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<int>((x[i] * (k % factors_[i])) % factors_[i]);
  return index(x);
}

int FinAbGroup::elem_order(int a) const {
  Elem x = element(a);
  int o = 1;
  for (size_t i = 0; i < x.size(); ++i) o = std::lcm(o, factors_[i] / std::gcd(factors_[i], x[i]));
  return o;
}

int FinAbGroup::generator(int i) const {
  Elem e(factors_.size(), 0);
  e.at(i) = 1;
  return index(e);
}

long FinAbGroup::pairing_exp(int chi, int g) const {
  Elem c = element(chi), a = element(g);
  long k = 0;
  for (size_t i = 0; i < c.size(); ++i) k += static_cast<long>(c[i]) * a[i] * (exponent_ / factors_[i]);
  return k % exponent_;
}

CycNum FinAbGroup::pairing(int chi, int g, int field_order) const {
  return root_of_unity(exponent_, static_cast<int>(pairing_exp(chi, g)), field_order);
}

std::string FinAbGroup::str() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(factors_[i]);
  return s;
}

FinAbGroup FinAbGroup::parse(std::string_view text) {
  std::vector<int> factors;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "trivial" || text.substr(pos) == "1") return FinAbGroup(std::vector<int>{});
  while (true) {
    skip();
    if (text.substr(pos, 2) != "Z/") throw ParseError(0, static_cast<int>(pos) + 1, "'Z/n'");
    pos += 2;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(0, static_cast<int>(pos) + 1, "cyclic order");
    int n = std::stoi(std::string(text.substr(start, pos - start)));
    if (n < 1) throw ParseError(0, static_cast<int>(start) + 1, "positive cyclic order");
    factors.push_back(n);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError(0, static_cast<int>(pos) + 1, "'x' or end of group");
    ++pos;
  }
  return FinAbGroup(factors);
}

std::string FinAbGroup::elem_str(int idx, bool dual) const {
  Elem e = element(idx);
  std::string s = dual ? "chi(" : "g(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

bool Subgroup::contains(int idx) const { return std::binary_search(elems.begin(), elems.end(), idx); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (side != other.side || !(group == other.group)) return false;
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

Subgroup whole(const FinAbGroup& g, Side side) {
  Subgroup s{g, side, {}};
  s.elems.resize(g.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

Subgroup trivial_subgroup(const FinAbGroup& g, Side side) { return Subgroup{g, side, {0}}; }

Subgroup generated(const FinAbGroup& g, Side side, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (int x : gens) {
      int y = g.add(elems[i], x);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{g, side, elems};
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& g, Side side) {
  // a subgroup of Z/n_1 x ... x Z/n_r needs at most r generators
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  const int r = std::max(1, g.rank());
  std::vector<int> gens;
  auto rec = [&](auto&& self, int start) -> void {
    Subgroup s = generated(g, side, gens);
    if (seen.insert(s.elems).second) out.push_back(s);
    if (static_cast<int>(gens.size()) == r) return;
    for (int x = start; x < g.order(); ++x) {
      gens.push_back(x);
      self(self, x + 1);
      gens.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

Subgroup perp(const Subgroup& s) {
  const FinAbGroup& g = s.group;
  Subgroup out{g, s.side == Side::Group ? Side::Dual : Side::Group, {}};
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : s.elems)
      if (g.pairing_exp(x, y) != 0) {
        ok = false;
        break;
      }
    if (ok) out.elems.push_back(x);
  }
  return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.side != b.side || !(a.group == b.group)) throw GroupMismatch("intersection of subgroups of different groups");
  Subgroup out{a.group, a.side, {}};
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out.elems));
  return out;
}

Subgroup product(const Subgroup& a, const Subgroup& b) {
  if (a.side != b.side || !(a.group == b.group)) throw GroupMismatch("product of subgroups of different groups");
  std::vector<int> gens = a.elems;
  gens.insert(gens.end(), b.elems.begin(), b.elems.end());
  return generated(a.group, a.side, gens);
}

std::vector<int> coset_reps(const Subgroup& s, const Subgroup& n) {
  if (!n.is_subgroup_of(s)) throw PreconditionViolated("coset_reps: N is not a subgroup of S");
  const FinAbGroup& g = s.group;
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  for (int x : s.elems) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int y : n.elems) covered[g.add(x, y)] = 1;
  }
  return reps;
}

namespace {

// Smallest k >= 1 with k*a in N.
int order_mod(const FinAbGroup& g, int a, const std::vector<char>& in_n) {
  int k = 1;
  int x = a;
  while (!in_n[x]) {
    x = g.add(x, a);
    ++k;
  }
  return k;
}

std::vector<char> member_mask(const FinAbGroup& g, const std::vector<int>& elems) {
  std::vector<char> m(g.order(), 0);
  for (int x : elems) m[x] = 1;
  return m;
}

// Elements b_1.. of S with orders m_1 >= m_2 >= ... such that S/N is the
// direct sum of the cyclic groups they generate.
std::vector<std::pair<int, int>> decompose(const FinAbGroup& g, const std::vector<int>& s, const std::vector<int>& n) {
  if (s.size() == n.size()) return {};
  std::vector<char> in_n = member_mask(g, n);
  int best = -1, best_order = 0;
  for (int x : s) {
    int o = order_mod(g, x, in_n);
    if (o > best_order) {
      best = x;
      best_order = o;
    }
  }
  std::vector<int> gens = n;
  gens.push_back(best);
  std::vector<int> n2 = generated(g, Side::Group, gens).elems;
  auto rest = decompose(g, s, n2);
  for (auto& [b, k] : rest) {
    int kb = g.scale(b, k);
    // kb = t*a mod N; t is divisible by k because a has maximal order
    int t = 0;
    int ta = 0;
    while (!in_n[g.add(kb, g.neg(ta))]) {
      ta = g.add(ta, best);
      ++t;
      if (t > best_order) throw DecompositionFailure("quotient decomposition failed");
    }
    if (t % k != 0) throw DecompositionFailure("non-divisible lift in quotient decomposition");
    b = g.add(b, g.neg(g.scale(best, t / k)));
  }
  std::vector<std::pair<int, int>> out{{best, best_order}};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

Quotient quotient(const Subgroup& s, const Subgroup& n) {
  if (!n.is_subgroup_of(s)) throw PreconditionViolated("quotient: N is not a subgroup of S");
  const FinAbGroup& g = s.group;
  auto parts = decompose(g, s.elems, n.elems);
  std::reverse(parts.begin(), parts.end());  // ascending orders
  std::vector<int> orders;
  Quotient q;
  for (auto& [b, k] : parts) {
    orders.push_back(k);
    q.lifts.push_back(b);
  }
  q.group = FinAbGroup(orders);
  // unit factors are dropped by FinAbGroup; they cannot occur here
  q.proj.assign(g.order(), -1);
  std::vector<int> rep_of(g.order(), -1);
  for (int x : s.elems) {
    if (rep_of[x] >= 0) continue;
    for (int y : n.elems) rep_of[g.add(x, y)] = x;
  }
  std::vector<int> qidx_of_rep(g.order(), -1);
  for (int c = 0; c < q.group.order(); ++c) {
    FinAbGroup::Elem e = q.group.element(c);
    int x = 0;
    for (size_t i = 0; i < e.size(); ++i) x = g.add(x, g.scale(q.lifts[i], e[i]));
    qidx_of_rep[rep_of[x]] = c;
  }
  for (int x : s.elems) q.proj[x] = qidx_of_rep[rep_of[x]];
  return q;
}

int induced_character(const FinAbGroup& g, const Quotient& q, int gamma) {
  const int e = g.exponent();
  FinAbGroup::Elem c(q.group.rank());
  for (int i = 0; i < q.group.rank(); ++i) {
    long k = g.pairing_exp(gamma, q.lifts[i]);
    const int m = q.group.factors()[i];
    // gamma(lift_i) = zeta_E^k must be an m-th root of unity zeta_m^c
    if ((k * m) % e != 0) throw PreconditionViolated("character is not trivial on the kernel");
    c[i] = static_cast<int>((k * m / e) % m);
  }
  // pairing of q.group uses zeta_{E'} with E' = exponent(q.group); the
  // exponent vector c encodes chi(unit_i) = zeta_{m_i}^{c_i} in both models
  return q.group.index(c);
}

CycNum orthogonality_sum(const Subgroup& s, int x, int field_order) {
  CycNum acc(field_order);
  for (int y : s.elems) acc += s.group.pairing(y, x, field_order);
  return acc;
}

}  // namespace ydh
