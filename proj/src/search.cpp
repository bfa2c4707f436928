#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ydh/catalog.hpp"
#include "ydh/error.hpp"

namespace ydh {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm identity_perm(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool commute(const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); }

Perm power(const Perm& p, int k) {
  Perm r = identity_perm(static_cast<int>(p.size()));
  for (int i = 0; i < k; ++i) r = compose(p, r);
  return r;
}

// Permutations of {0..d-1} fixing 0, in lexicographic order.
std::vector<Perm> fixing_zero(int d) {
  std::vector<Perm> out;
  Perm p = identity_perm(d);
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<int> encode(const ActionAnsatz& a) {
  std::vector<int> v;
  for (const auto& p : a.phi) v.insert(v.end(), p.begin(), p.end());
  for (const auto& p : a.psi) v.insert(v.end(), p.begin(), p.end());
  return v;
}

ActionAnsatz conjugate(const ActionAnsatz& a, const Perm& t) {
  const Perm ti = inverse_perm(t);
  ActionAnsatz out;
  for (const auto& p : a.phi) out.phi.push_back(compose(t, compose(p, ti)));
  for (const auto& p : a.psi) out.psi.push_back(compose(t, compose(p, ti)));
  return out;
}

std::vector<ActionAnsatz> enumerate_ansatz(const FinAbGroup& g, int d) {
  const std::vector<Perm> all = fixing_zero(d);
  const int r = g.rank();
  std::vector<std::vector<Perm>> cand(2 * r);
  for (int slot = 0; slot < 2 * r; ++slot) {
    const int n = g.factors()[slot % r];
    for (const Perm& p : all)
      if (power(p, n) == identity_perm(d)) cand[slot].push_back(p);
  }
  std::set<std::vector<int>> seen;
  std::vector<ActionAnsatz> out;
  std::vector<Perm> chosen;
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == 2 * r) {
      ActionAnsatz a;
      a.phi.assign(chosen.begin(), chosen.begin() + r);
      a.psi.assign(chosen.begin() + r, chosen.end());
      ActionAnsatz best = a;
      std::vector<int> best_key = encode(a);
      for (const Perm& t : all) {
        ActionAnsatz c = conjugate(a, t);
        std::vector<int> k = encode(c);
        if (k < best_key) {
          best_key = k;
          best = c;
        }
      }
      if (seen.insert(best_key).second) out.push_back(best);
      return;
    }
    for (const Perm& p : cand[slot]) {
      bool ok = true;
      for (const Perm& q : chosen) ok = ok && commute(p, q);
      if (!ok) continue;
      chosen.push_back(p);
      self(self, slot + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const ActionAnsatz& x, const ActionAnsatz& y) { return encode(x) < encode(y); });
  return out;
}

// Permutation of every group element (phi side or psi side).
std::vector<Perm> element_perms(const FinAbGroup& g, const std::vector<Perm>& gens, int d) {
  std::vector<Perm> out;
  for (int x = 0; x < g.order(); ++x) {
    FinAbGroup::Elem ex = g.element(x);
    Perm p = identity_perm(d);
    for (int i = 0; i < g.rank(); ++i) p = compose(power(gens[i], ex[i]), p);
    out.push_back(p);
  }
  return out;
}

YDModule ansatz_module(const FinAbGroup& g, int order, const ActionAnsatz& a) {
  const int d = static_cast<int>(a.phi.empty() ? (a.psi.empty() ? 1 : a.psi[0].size()) : a.phi[0].size());
  std::vector<Mat> phi, psi;
  for (const auto& p : a.phi) phi.push_back(Mat::permutation(p, order));
  for (const auto& p : a.psi) psi.push_back(Mat::permutation(p, order));
  return YDModule(g, order, d, ModSide::Left, phi, psi);
}

// Reasons from the structure theory why no commutative semisimple Hopf
// algebra can carry this action; empty when none applies.
std::string prune_reason(const FinAbGroup& g, int order, int d, const ActionAnsatz& a) {
  const std::vector<Perm> pi = element_perms(g, a.phi, d), rho = element_perms(g, a.psi, d);
  if (std::gcd(d, g.order()) == 1) {
    YDModule m = ansatz_module(g, order, a);
    if (!(braiding(m, m) == flip(d, d, order))) return "coprime dimension with nontrivial braiding";
  }
  for (int i = 0; i < d; ++i) {
    std::vector<int> t, q;
    for (int x = 0; x < g.order(); ++x) {
      if (pi[x][i] == i) t.push_back(x);
      if (rho[x][i] == i) q.push_back(x);
    }
    const Subgroup ts{g, Side::Group, t}, qs{g, Side::Dual, q};
    const Subgroup qp = perp(qs), tp = perp(ts);
    const int index = qp.order() / intersect(ts, qp).order();
    if (d % index != 0) return "index does not divide the dimension";
    std::set<int> o1, o2;
    for (int x : qp.elems) o1.insert(pi[x][i]);
    for (int x : tp.elems) o2.insert(rho[x][i]);
    if (o1 != o2) return "orbits under the annihilators differ";
  }
  return {};
}

// Quadratic polynomial in the unknowns: terms c * x_v1 * x_v2, v = -1 for none.
struct Term {
  CycNum c;
  int v1, v2;
};
struct Equation {
  std::vector<Term> terms;
  std::vector<int> vars;
};

// c_k^{ij} as a constant or an unknown.
struct Coef {
  int var = -1;
  int value = 0;  // used when var < 0
};

class Solver {
 public:
  Solver(const FinAbGroup& g, int order, int d, const ActionAnsatz& a, const std::vector<CycNum>& budget, long node_limit)
      : g_(g), n_(order), d_(d), budget_(budget), limit_(node_limit) {
    pi_ = element_perms(g, a.phi, d);
    rho_ = element_perms(g, a.psi, d);
    number_unknowns(a);
    build_equations();
  }

  bool infeasible() const { return infeasible_; }
  int unknowns() const { return nv_; }
  long nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }
  bool budget_used() const { return budget_used_; }

  void run(const std::function<void(const std::vector<CycNum>&)>& emit) {
    if (infeasible_) return;
    emit_ = &emit;
    assign_.assign(nv_, std::nullopt);
    dfs();
  }

 private:
  Coef coef(int k, int i, int j) const {
    if (i == 0) return {-1, j == k ? 1 : 0};
    if (j == 0) return {-1, i == k ? 1 : 0};
    return {var_[(k * d_ + i) * d_ + j], 0};
  }

  void number_unknowns(const ActionAnsatz& a) {
    const int d = d_;
    var_.assign(static_cast<size_t>(d) * d * d, -1);
    std::vector<Perm> gens = a.phi;
    gens.insert(gens.end(), a.psi.begin(), a.psi.end());
    for (int k = 0; k < d; ++k)
      for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j) {
          const int idx = (k * d + i) * d + j;
          if (var_[idx] >= 0) continue;
          const int v = nv_++;
          std::vector<int> stack{idx};
          var_[idx] = v;
          while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            const int tk = t / (d * d), ti = (t / d) % d, tj = t % d;
            for (const Perm& p : gens) {
              const int u = (p[tk] * d + p[ti]) * d + p[tj];
              if (var_[u] < 0) {
                var_[u] = v;
                stack.push_back(u);
              }
            }
          }
        }
  }

  using Poly = std::map<std::pair<int, int>, CycNum>;

  void add_product(Poly& p, const CycNum& s, const Coef& x, const Coef& y) const {
    if (s.is_zero()) return;
    if (x.var < 0 && x.value == 0) return;
    if (y.var < 0 && y.value == 0) return;
    int a = x.var, b = y.var;
    if (a > b) std::swap(a, b);
    // constants are 0 or 1, so the coefficient is s
    auto key = std::pair{a < 0 ? b : a, a < 0 ? -1 : b};
    if (a < 0 && b < 0) key = {-1, -1};
    auto [it, fresh] = p.try_emplace(key, s);
    if (!fresh) it->second += s;
  }

  void add_linear(Poly& p, const CycNum& s, const Coef& x) const { add_product(p, s, x, Coef{-1, 1}); }

  void push(Poly& p, std::set<std::string>& seen) {
    Equation e;
    CycNum lead;
    for (auto& [k, c] : p) {
      if (c.is_zero()) continue;
      if (lead.is_zero()) lead = c;
      e.terms.push_back({c / lead, k.first, k.second});
    }
    if (e.terms.empty()) return;
    if (e.terms.size() == 1 && e.terms[0].v1 < 0) {
      infeasible_ = true;
      return;
    }
    std::string key;
    std::set<int> vs;
    for (const Term& t : e.terms) {
      key += std::to_string(t.v1) + "," + std::to_string(t.v2) + ":" + t.c.str() + ";";
      if (t.v1 >= 0) vs.insert(t.v1);
      if (t.v2 >= 0) vs.insert(t.v2);
    }
    if (!seen.insert(key).second) return;
    e.vars.assign(vs.begin(), vs.end());
    eqs_.push_back(std::move(e));
  }

  void build_equations() {
    const int d = d_, n = n_;
    std::set<std::string> seen;
    const CycNum one(n, 1), minus(n, -1);
    // Delta(1) = 1 (x) 1
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Poly p;
        p[{-1, -1}] = minus;
        for (int k = 0; k < d; ++k) add_linear(p, one, coef(k, i, j));
        push(p, seen);
      }
    // E_ab E_cd = M[a,b,c,dd] E_a,dd in the twisted tensor square
    std::vector<CycNum> m(static_cast<size_t>(d) * d * d * d, CycNum(n, 0));
    const CycNum inv_g(n, Rational(1, g_.order()));
    for (int x = 0; x < g_.order(); ++x)
      for (int chi = 0; chi < g_.order(); ++chi) {
        const CycNum val = inv_g * g_.pairing(chi, g_.neg(x), n);
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c) m[((pi_[x][c] * d + b) * d + c) * d + rho_[chi][b]] += val;
      }
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        for (int a = 0; a < d; ++a)
          for (int dd = 0; dd < d; ++dd) {
            Poly p;
            for (int b = 0; b < d; ++b)
              for (int c = 0; c < d; ++c) add_product(p, m[((a * d + b) * d + c) * d + dd], coef(k, a, b), coef(l, c, dd));
            if (k == l) add_linear(p, minus, coef(k, a, dd));
            push(p, seen);
          }
    // coassociativity
    for (int k = 0; k < d; ++k)
      for (int p1 = 0; p1 < d; ++p1)
        for (int q = 0; q < d; ++q)
          for (int r = 0; r < d; ++r) {
            Poly p;
            for (int i = 0; i < d; ++i) {
              add_product(p, one, coef(k, i, r), coef(i, p1, q));
              add_product(p, minus, coef(k, p1, i), coef(i, q, r));
            }
            push(p, seen);
          }
    occ_.assign(nv_, {});
    for (size_t e = 0; e < eqs_.size(); ++e)
      for (int v : eqs_[e].vars) occ_[v].push_back(static_cast<int>(e));
  }

  struct Residual {
    int unassigned = 0;
    int var = -1;  // the single unassigned variable
    CycNum a, b, c;  // a x^2 + b x + c when unassigned == 1
  };

  Residual residual(const Equation& e) const {
    Residual r;
    for (int v : e.vars)
      if (!assign_[v]) {
        ++r.unassigned;
        r.var = v;
      }
    if (r.unassigned > 1) return r;
    for (const Term& t : e.terms) {
      CycNum c = t.c;
      int free = 0;
      for (int v : {t.v1, t.v2}) {
        if (v < 0) continue;
        if (assign_[v])
          c *= *assign_[v];
        else
          ++free;
      }
      if (free == 0)
        r.c += c;
      else if (free == 1)
        r.b += c;
      else
        r.a += c;
    }
    return r;
  }

  std::vector<CycNum> roots(const Residual& r) const {
    std::vector<Root> rs = roots_in_field(CycPoly({r.c, r.b, r.a}), n_);
    std::vector<CycNum> out;
    for (const Root& x : rs) out.push_back(x.value);
    return out;
  }

  bool propagate(std::vector<int>& trail) {
    std::vector<int> queue(eqs_.size());
    std::iota(queue.begin(), queue.end(), 0);
    std::vector<char> queued(eqs_.size(), 1);
    while (!queue.empty()) {
      const int ei = queue.back();
      queue.pop_back();
      queued[ei] = 0;
      Residual r = residual(eqs_[ei]);
      if (r.unassigned > 1) continue;
      if (r.unassigned == 0) {
        if (!r.c.is_zero()) return false;
        continue;
      }
      CycNum value;
      if (r.a.is_zero()) {
        if (r.b.is_zero()) {
          if (!r.c.is_zero()) return false;
          continue;
        }
        value = -r.c / r.b;
      } else {
        std::vector<CycNum> rs = roots(r);
        if (rs.empty()) return false;
        if (rs.size() > 1) continue;
        value = rs[0];
      }
      assign_[r.var] = value;
      trail.push_back(r.var);
      for (int e2 : occ_[r.var])
        if (!queued[e2]) {
          queued[e2] = 1;
          queue.push_back(e2);
        }
    }
    return true;
  }

  void dfs() {
    if (truncated_) return;
    if (++nodes_ > limit_) {
      truncated_ = true;
      return;
    }
    std::vector<int> trail;
    if (propagate(trail)) branch();
    for (int v : trail) assign_[v].reset();
  }

  void try_values(int v, const std::vector<CycNum>& values) {
    for (const CycNum& x : values) {
      assign_[v] = x;
      dfs();
      assign_[v].reset();
      if (truncated_) return;
    }
  }

  void branch() {
    int best = -1, best_count = 0;
    for (size_t ei = 0; ei < eqs_.size(); ++ei) {
      Residual r = residual(eqs_[ei]);
      if (r.unassigned == 1 && !r.a.is_zero()) {
        // quadratic with two roots in the field
        try_values(r.var, roots(r));
        return;
      }
      if (r.unassigned > 1 && (best < 0 || r.unassigned < best_count)) {
        best = static_cast<int>(ei);
        best_count = r.unassigned;
      }
    }
    int v = -1;
    if (best >= 0) {
      for (int x : eqs_[best].vars)
        if (!assign_[x]) {
          v = x;
          break;
        }
    } else {
      for (int x = 0; x < nv_; ++x)
        if (!assign_[x]) {
          v = x;
          break;
        }
    }
    if (v < 0) {
      std::vector<CycNum> c(static_cast<size_t>(d_) * d_ * d_, CycNum(n_, 0));
      for (int k = 0; k < d_; ++k)
        for (int i = 0; i < d_; ++i)
          for (int j = 0; j < d_; ++j) {
            Coef x = coef(k, i, j);
            c[(k * d_ + i) * d_ + j] = x.var < 0 ? CycNum(n_, x.value) : *assign_[x.var];
          }
      (*emit_)(c);
      return;
    }
    budget_used_ = true;
    try_values(v, budget_);
  }

  FinAbGroup g_;
  int n_, d_;
  std::vector<CycNum> budget_;
  long limit_;
  std::vector<Perm> pi_, rho_;
  std::vector<int> var_;
  int nv_ = 0;
  std::vector<Equation> eqs_;
  std::vector<std::vector<int>> occ_;
  bool infeasible_ = false;
  std::vector<std::optional<CycNum>> assign_;
  long nodes_ = 0;
  bool truncated_ = false;
  bool budget_used_ = false;
  const std::function<void(const std::vector<CycNum>&)>* emit_ = nullptr;
};

// Smallest rendering of the coefficients over relabelings commuting with the ansatz.
std::string canonical_key(const std::vector<CycNum>& c, int d, const ActionAnsatz& a) {
  std::string best;
  bool first = true;
  for (const Perm& t : fixing_zero(d)) {
    bool central = true;
    for (const auto* gens : {&a.phi, &a.psi})
      for (const Perm& p : *gens) central = central && commute(t, p);
    if (!central) continue;
    std::vector<std::string> moved(c.size());
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) moved[(t[k] * d + t[i]) * d + t[j]] = c[(k * d + i) * d + j].str();
    std::string key;
    for (const auto& s : moved) key += s + ";";
    if (first || key < best) {
      best = key;
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<CycNum> budget_values(const CoefficientBudget& b, int order) {
  if (order % b.root_order != 0) throw NonDivisibleOrders("budget roots must live in the field");
  std::set<Rational> rats;
  for (int q = 1; q <= b.max_denominator; ++q)
    for (int p = -q; p <= q; ++p) {
      Rational r(p, q);
      r.canonicalize();
      rats.insert(r);
    }
  const int phi = euler_phi(b.root_order);
  std::vector<Rational> rv(rats.begin(), rats.end());
  std::vector<CycNum> out;
  std::vector<size_t> idx(phi, 0);
  while (true) {
    std::vector<Rational> coeffs;
    for (int t = 0; t < phi; ++t) coeffs.push_back(rv[idx[t]]);
    out.push_back(CycNum(b.root_order, coeffs).embed(order));
    int t = 0;
    while (t < phi && ++idx[t] == rv.size()) idx[t++] = 0;
    if (t == phi) break;
  }
  // small values first: 0, 1, -1, then canonical order
  std::sort(out.begin(), out.end());
  auto front = [&](const CycNum& x, size_t pos) {
    auto it = std::find(out.begin(), out.end(), x);
    std::rotate(out.begin() + static_cast<long>(pos), it, it + 1);
  };
  front(CycNum(order, 0), 0);
  front(CycNum(order, 1), 1);
  front(CycNum(order, -1), 2);
  return out;
}

YDHopfAlgebra normal_form_algebra(const FinAbGroup& g, int order, const ActionAnsatz& a, const std::vector<CycNum>& c) {
  YDModule mod = ansatz_module(g, order, a);
  const int d = mod.dim();
  if (static_cast<int>(c.size()) != d * d * d) throw DimensionMismatch("coproduct coefficients need d^3 entries");
  Tensor3 mult(d, d, d, order), comult(d, d, d, order);
  Vec unit = zero_vec(d, order), counit = unit_vec(d, 0, order);
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) {
    mult(i, i, i) = CycNum(order, 1);
    unit[i] = CycNum(order, 1);
    names.push_back("e" + std::to_string(i));
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) comult(i, x, y) = c[(i * d + x) * d + y];
  }
  return YDHopfAlgebra(mod, mult, unit, comult, counit, std::nullopt, names);
}

SearchResult search_nontrivial(const SearchConfig& cfg) {
  const FinAbGroup& g = cfg.group;
  const int d = cfg.dim;
  if (d < 1 || d > 8 || g.order() > 8) throw PreconditionViolated("search is limited to dim <= 8 and |G| <= 8");
  const int order = cfg.order != 0 ? cfg.order
                                   : static_cast<int>(lcm_int(cfg.budget.root_order, 2 * g.exponent()));
  const std::vector<CycNum> budget = budget_values(cfg.budget, order);
  SearchResult res;
  res.ansatz = cfg.ansatz.empty() ? enumerate_ansatz(g, d) : cfg.ansatz;
  std::set<std::string> seen;
  for (size_t ai = 0; ai < res.ansatz.size(); ++ai) {
    const ActionAnsatz& a = res.ansatz[ai];
    if (cfg.prune && !prune_reason(g, order, d, a).empty()) {
      res.pruned.push_back(static_cast<int>(ai));
      continue;
    }
    Solver solver(g, order, d, a, budget, cfg.node_limit);
    solver.run([&](const std::vector<CycNum>& c) {
      const std::string key = std::to_string(ai) + "|" + canonical_key(c, d, a);
      if (!seen.insert(key).second) return;
      YDHopfAlgebra alg = normal_form_algebra(g, order, a, c);
      try {
        alg = alg.with_antipode(solve_antipode(alg));
      } catch (const NoAntipode&) {
        ++res.bialgebras_without_antipode;
        return;
      } catch (const NotColinear&) {
        ++res.bialgebras_without_antipode;
        return;
      }
      if (!verify_axioms(alg).pass()) return;
      const bool trivial = is_trivial(alg).trivial;
      res.hits.push_back({std::move(alg), trivial, static_cast<int>(ai)});
    });
    res.nodes += solver.nodes();
    res.budget_branching = res.budget_branching || solver.budget_used();
    res.truncated = res.truncated || solver.truncated();
  }
  return res;
}

}  // namespace ydh
