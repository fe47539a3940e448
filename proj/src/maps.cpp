#include "arrowknot/maps.hpp"

#include <numeric>

namespace arrowknot {

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> ids(static_cast<std::size_t>(k));
  std::iota(ids.begin(), ids.end(), 0);
  while (true) {
    fn(ids);
    int i = k - 1;
    while (i >= 0 && ids[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++ids[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) ids[static_cast<std::size_t>(j)] = ids[static_cast<std::size_t>(j - 1)] + 1;
  }
}

GaussComb sign_expand_S(const ArrowDiagram& a) {
  GaussComb out;
  const int n = a.degree();
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int product = 1;
    for (int i = 0; i < n; ++i) {
      const int s = (mask >> i) & 1u ? -1 : 1;
      signs[static_cast<std::size_t>(i)] = s;
      product *= s;
    }
    out.add(with_signs(a, signs), Rational(product));
  }
  return out;
}

GaussComb sign_expand_S(const ArrowComb& a) {
  GaussComb out;
  for (const auto& [k, c] : a) {
    GaussComb part = sign_expand_S(k);
    part *= c;
    out += part;
  }
  return out;
}

GaussComb subdiagram_expand_I(const GaussDiagram& g) {
  GaussComb out;
  for (int k = 0; k <= g.degree(); ++k) {
    for_each_subset(g.degree(), k, [&](std::span<const int> ids) { out.add(g.induced(ids), Rational(1)); });
  }
  return out;
}

GaussComb subdiagram_expand_I(const GaussComb& g) {
  GaussComb out;
  for (const auto& [k, c] : g) {
    GaussComb part = subdiagram_expand_I(k);
    part *= c;
    out += part;
  }
  return out;
}

Integer double_paren(const ArrowDiagram& a, const GaussDiagram& g) {
  const ArrowDiagram target = canonicalize(a);
  if (target.K() != g.K() || target.degree() > g.degree()) return 0;
  Integer total = 0;
  for_each_subset(g.degree(), target.degree(), [&](std::span<const int> ids) {
    if (forget_signs(g.induced(ids)).same_encoding(target)) {
      int product = 1;
      for (int id : ids) product *= g.arrow(id).sign;
      total += product;
    }
  });
  return total;
}

Integer double_angle(const ArrowDiagram& a, const GaussDiagram& g) {
  return aut_order(a) * double_paren(a, g);
}

Rational double_angle(const ArrowComb& a, const GaussDiagram& g) {
  Rational s = 0;
  for (const auto& [k, c] : a) s += c * Rational(double_angle(k, g));
  return s;
}

BasedComb base_expand(const ArrowDiagram& a) {
  BasedComb out;
  for (int arc = 0; arc < a.endpoint_count(); ++arc) out.add(BasedArrow(a, arc), Rational(1));
  return out;
}

BasedComb base_expand(const ArrowComb& a) {
  BasedComb out;
  for (const auto& [k, c] : a) {
    BasedComb part = base_expand(k);
    part *= c;
    out += part;
  }
  return out;
}

}  // namespace arrowknot
