// Berlekamp-Zassenhaus factorization of squarefree polynomials over Q:
// Cantor-Zassenhaus modulo a small prime, quadratic Hensel lifting, and
// exhaustive recombination with trial division.
#include <algorithm>
#include <cstdint>
#include <random>

#include "ydh/error.hpp"
#include "ydh/poly.hpp"

namespace ydh {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  void trim(FpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) const {
    FpPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    FpPoly q(r.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    const size_t db = b.size() - 1;
    for (size_t i = r.size(); i-- > db;) {
      u64 c = mul(r[i], il);
      q[i - db] = c;
      if (!c) continue;
      for (size_t j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }
  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FpPoly r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // returns (g, s, t) with s a + t b = g monic
  void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
      auto [q, r] = divrem(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    s = s0;
    t = t0;
  }
  FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) const { return divrem(mul(a, b), m).second; }
  FpPoly powmod(FpPoly a, const Integer& e, const FpPoly& m) const {
    FpPoly r{1};
    a = divrem(a, m).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = mulmod(r, r, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, a, m);
    }
    return r;
  }
  FpPoly derivative(const FpPoly& a) const {
    FpPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }
};

void equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), F.p, d);
  Integer e = (pd - 1) / 2;
  while (true) {
    FpPoly a(n);
    for (auto& c : a) c = rng() % F.p;
    F.trim(a);
    if (a.size() < 2) continue;
    FpPoly b = F.sub(F.powmod(a, e, g), FpPoly{1});
    FpPoly c = F.gcd(b, g);
    int dc = static_cast<int>(c.size()) - 1;
    if (dc > 0 && dc < n) {
      equal_degree(F, c, d, rng, out);
      equal_degree(F, F.divrem(g, c).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eed5eedULL + F.p);
  FpPoly h{0, 1};
  const FpPoly x{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    FpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree(F, g, i, rng, out);
      f = F.divrem(f, g).first;
      h = F.divrem(h, f).second;
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---- integer polynomials modulo m ----

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

// Division by a polynomial monic modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& h, const Integer& m) {
  ZPoly r = zmod(a, m);
  if (r.size() < h.size()) return {{}, r};
  ZPoly q(r.size() - h.size() + 1);
  const size_t dh = h.size() - 1;
  for (size_t i = r.size(); i-- > dh;) {
    Integer c = r[i] % m;
    if (c < 0) c += m;
    q[i - dh] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dh; ++j) r[i - dh + j] = (r[i - dh + j] - c * h[j]) % m;
  }
  return {zmod(q, m), zmod(r, m)};
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

FpPoly to_fp(const ZPoly& a, u64 p) {
  FpPoly r;
  Integer pp(static_cast<unsigned long>(p));
  for (const auto& c : a) {
    Integer v = c % pp;
    if (v < 0) v += pp;
    r.push_back(v.get_ui());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Lifts f = g h mod p to mod >= M; h monic, lc(g) = lc(f).
void hensel_two(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly s, ZPoly t, u64 p, const Integer& M) {
  Integer m(static_cast<unsigned long>(p));
  while (m < M) {
    Integer m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivrem_monic(zmul(s, e), h, m2);
    ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    ZPoly h2 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), m2);
    auto [c, d] = zdivrem_monic(zmul(s, b), h2, m2);
    s = zmod(zsub(s, d), m2);
    t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  g = zmod(g, M);
  h = zmod(h, M);
}

// Monic lifts modulo M of the modular factors of f.
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<FpPoly>& facs, u64 p, const Integer& M) {
  Fp F{p};
  if (facs.size() == 1) {
    Integer lc = f.back();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly u = f;
    for (auto& c : u) c *= inv;
    return {zmod(u, M)};
  }
  size_t half = facs.size() / 2;
  std::vector<FpPoly> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
  FpPoly g0{to_fp(ZPoly{f.back()}, p)[0]};
  for (auto& a : left) g0 = F.mul(g0, a);
  FpPoly h0{1};
  for (auto& a : right) h0 = F.mul(h0, a);
  FpPoly s0, t0;
  F.xgcd(g0, h0, s0, t0);
  ZPoly g = from_fp(g0), h = from_fp(h0);
  hensel_two(f, g, h, from_fp(s0), from_fp(t0), p, M);
  auto a = hensel_multi(g, left, p, M);
  auto b = hensel_multi(h, right, p, M);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

QPoly to_monic_q(const ZPoly& a) {
  QPoly q;
  for (const auto& c : a) q.emplace_back(c, a.back());
  for (auto& c : q) c.canonicalize();
  return q;
}

// Exact division in Z[x]; false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  quot.assign(r.size() - b.size() + 1, 0);
  const size_t db = b.size() - 1;
  for (size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r[i] / b.back();
    quot[i - db] = c;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(quot);
  return true;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    for (u64 n = 3; ps.size() < 60; n += 2) {
      bool prime = true;
      for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) prime = false;
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

}  // namespace

std::vector<QPoly> factor_squarefree_rational(const QPoly& fin, int degree_cap) {
  QPoly fq = fin;
  trim(fq);
  if (fq.empty()) throw PreconditionViolated("factor of zero polynomial");
  if (deg(fq) <= 0) return {};
  // primitive integer representative with positive leading coefficient
  Integer den = 1;
  for (const auto& c : fq) den = lcm(den, Integer(c.get_den()));
  ZPoly f;
  for (const auto& c : fq) f.push_back(Integer(c * den));
  Integer cont = content(f);
  for (auto& c : f) c /= cont;
  if (f.back() < 0)
    for (auto& c : f) c = -c;
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {to_monic_q(f)};

  // choose the prime giving the fewest modular factors among a few candidates
  u64 best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (u64 p : small_primes()) {
    Fp F{p};
    if (f.back() % Integer(static_cast<unsigned long>(p)) == 0) continue;
    FpPoly fp = to_fp(f, p);
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    auto facs = factor_mod_p(F, F.monic(fp));
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (++tried == 5 || best.size() == 1) break;
  }
  if (best_p == 0) throw DecompositionFailure("no suitable prime for modular factorization");
  if (best.size() == 1) return {to_monic_q(f)};

  // Mignotte-type bound on coefficients of lc * (any factor)
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Integer M = 1;
  Integer pz(static_cast<unsigned long>(best_p));
  while (M <= 2 * bound) M *= pz;

  std::vector<ZPoly> lifted = hensel_multi(f, best, best_p, M);

  std::vector<QPoly> out;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
  const bool capped = degree_cap > 0;
  for (int s = 1;; ++s) {
    const int r = static_cast<int>(alive.size());
    if (capped ? s >= r : 2 * s > r) break;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      int dsum = 0;
      for (int i : idx) dsum += static_cast<int>(lifted[alive[i]].size()) - 1;
      if (capped && dsum > degree_cap) continue;
      ZPoly g{f.back()};
      for (int i : idx) g = zmod(zmul(g, lifted[alive[i]]), M);
      g = zsym(g, M);
      Integer c = content(g);
      for (auto& x : g) x /= c;
      if (g.back() < 0)
        for (auto& x : g) x = -x;
      if (g[0] != 0 && f[0] % g[0] != 0) continue;
      ZPoly quot;
      if (!zdivides(f, g, quot)) continue;
      out.push_back(to_monic_q(g));
      f = quot;
      std::vector<int> rest;
      for (int i = 0; i < r; ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(alive[i]);
      alive = rest;
      found = true;
      break;
    } while (next_combination(idx, r));
    if (found) --s;
  }
  if (f.size() > 1) out.push_back(to_monic_q(f));
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

}  // namespace ydh
