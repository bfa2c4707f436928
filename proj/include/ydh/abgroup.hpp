#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ydh/cyclo.hpp"

namespace ydh {

/*
 * Finite abelian group Z/n_1 x ... x Z/n_r.  Elements are addressed by a
 * dense index (mixed radix, first coordinate most significant) so that the
 * canonical order of elements is lexicographic in exponent vectors.  The
 * character group uses the same coordinates: chi(c) evaluated at g(a) is
 * prod_i zeta_{n_i}^{c_i a_i}.
 */
class FinAbGroup {
 public:
  using Elem = std::vector<int>;

  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  int index(const Elem& e) const;
  Elem element(int idx) const;
  int identity() const { return 0; }
  int add(int a, int b) const;
  int neg(int a) const;
  int scale(int a, long k) const;
  int elem_order(int a) const;
  int generator(int i) const;  // i-th unit vector

  // chi(g) = zeta_E^k with E = exponent(); returns k in [0, E).
  long pairing_exp(int chi, int g) const;
  CycNum pairing(int chi, int g, int field_order) const;

  std::string str() const;  // "Z/2 x Z/4", "trivial"
  static FinAbGroup parse(std::string_view text);
  std::string elem_str(int idx, bool dual) const;  // "g(1,0)" / "chi(1,0)"

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<int> factors_;
  std::vector<int> stride_;
  int order_ = 1;
  int exponent_ = 1;
};

enum class Side { Group, Dual };

// Subgroup of G (Side::Group) or of its character group (Side::Dual).
struct Subgroup {
  FinAbGroup group;
  Side side = Side::Group;
  std::vector<int> elems;  // sorted element indices

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int idx) const;
  bool is_subgroup_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.side == b.side && a.group == b.group && a.elems == b.elems;
  }
};

Subgroup whole(const FinAbGroup& g, Side side);
Subgroup trivial_subgroup(const FinAbGroup& g, Side side);
Subgroup generated(const FinAbGroup& g, Side side, const std::vector<int>& gens);
std::vector<Subgroup> all_subgroups(const FinAbGroup& g, Side side);
Subgroup perp(const Subgroup& s);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup product(const Subgroup& a, const Subgroup& b);

// Canonical (smallest-index) representatives of S/N.
std::vector<int> coset_reps(const Subgroup& s, const Subgroup& n);

/*
 * Explicit model of S/N as Z/m_1 x ... x Z/m_k.  `lifts[i]` is an element of
 * S mapping to the i-th unit vector; `proj[x]` is the quotient index of an
 * element x of S and -1 outside S.
 */
struct Quotient {
  FinAbGroup group;
  std::vector<int> lifts;
  std::vector<int> proj;
};

Quotient quotient(const Subgroup& s, const Subgroup& n);

// For gamma in T^perp, the induced character of Q^perp/(T cap Q^perp); the
// result indexes the character group of q.group.  Throws when gamma is not
// trivial on the kernel.
int induced_character(const FinAbGroup& g, const Quotient& q, int gamma);

// sum_{s in S} pairing(s, x) for x on the opposite side.
CycNum orthogonality_sum(const Subgroup& s, int x, int field_order);

}  // namespace ydh
