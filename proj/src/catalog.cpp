#include "ydh/catalog.hpp"

#include "ydh/error.hpp"

namespace ydh {

YDHopfAlgebra trivial_instance(const FinAbGroup& g, AlgebraKind kind, const FinAbGroup& c, int order) {
  if (order == 0) order = static_cast<int>(lcm_int(lcm_int(2, g.exponent()), c.exponent()));
  const int d = c.order();
  Tensor3 mult(d, d, d, order), comult(d, d, d, order);
  Vec unit = zero_vec(d, order), counit = zero_vec(d, order);
  Mat s(d, d, order);
  std::vector<std::string> names;
  const CycNum one(order, 1);
  if (kind == AlgebraKind::GroupAlgebra) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) mult(x, y, c.add(x, y)) = one;
      comult(x, x, x) = one;
      counit[x] = one;
      s(c.neg(x), x) = one;
      names.push_back(c.elem_str(x, false));
    }
    unit[0] = one;
  } else {
    for (int x = 0; x < d; ++x) {
      mult(x, x, x) = one;
      for (int y = 0; y < d; ++y) comult(c.add(x, y), x, y) = one;
      unit[x] = one;
      s(c.neg(x), x) = one;
      names.push_back("e" + c.elem_str(x, false).substr(1));
    }
    counit[0] = one;
  }
  return YDHopfAlgebra(YDModule::trivial(g, order, d), mult, unit, comult, counit, s, names);
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  const std::vector<FinAbGroup> cs{FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2}),
                                   FinAbGroup({6})};
  const std::vector<FinAbGroup> gs{FinAbGroup({2}), FinAbGroup({4}), FinAbGroup({2, 2})};
  for (const auto& g : gs)
    for (const auto& c : cs)
      for (AlgebraKind k : {AlgebraKind::GroupAlgebra, AlgebraKind::DualGroupAlgebra}) {
        std::string name = (k == AlgebraKind::GroupAlgebra ? "K[" + c.str() + "]" : "K^(" + c.str() + ")");
        out.push_back({name + " over " + g.str(), trivial_instance(g, k, c)});
      }
  return out;
}

}  // namespace ydh
