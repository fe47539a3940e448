#pragma once

#include <functional>
#include <span>

#include "arrowknot/based.hpp"
#include "arrowknot/lincomb.hpp"

namespace arrowknot {

using GaussComb = LinComb<GaussDiagram>;
using ArrowComb = LinComb<ArrowDiagram>;
using BasedComb = LinComb<BasedArrow>;
using DegenerateComb = LinComb<DegenerateArrow>;

/// Calls `fn(ids)` for every k-subset of {0..n-1}, ids in increasing order.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn);

/// S(A) = sum over sign maps of sign(σ)·A^σ.
GaussComb sign_expand_S(const ArrowDiagram& a);
GaussComb sign_expand_S(const ArrowComb& a);

/// I(G) = sum of all subdiagrams, the empty one included.
GaussComb subdiagram_expand_I(const GaussDiagram& g);
GaussComb subdiagram_expand_I(const GaussComb& g);

template <class Key>
LinComb<Key> project_pi(const LinComb<Key>& x, int n) {
  return x.filtered([n](const Key& k) { return k.degree() == n; });
}

template <class Key>
LinComb<Key> principal_part(const LinComb<Key>& x) {
  int top = -1;
  for (const auto& [k, c] : x) top = std::max(top, k.degree());
  return top < 0 ? LinComb<Key>() : project_pi(x, top);
}

/// Orthonormal product on the diagram basis.
template <class Key>
Rational pair_ortho(const LinComb<Key>& x, const LinComb<Key>& y) {
  const LinComb<Key>& small = x.size() <= y.size() ? x : y;
  const LinComb<Key>& large = x.size() <= y.size() ? y : x;
  Rational s = 0;
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

/// <x, y> = sum of aut(D)·x_D·y_D.
template <class Key>
Rational pair_norm(const LinComb<Key>& x, const LinComb<Key>& y) {
  const LinComb<Key>& small = x.size() <= y.size() ? x : y;
  const LinComb<Key>& large = x.size() <= y.size() ? y : x;
  Rational s = 0;
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) s += c * it->second * aut_order(k);
  }
  return s;
}

/// ((A, G)): signed count of the subsets of G's arrows that become A once
/// signs are forgotten.
Integer double_paren(const ArrowDiagram& a, const GaussDiagram& g);
/// <<A, G>> = |Aut(A)|·((A, G)).
Integer double_angle(const ArrowDiagram& a, const GaussDiagram& g);
Rational double_angle(const ArrowComb& a, const GaussDiagram& g);

/// Sum of the based diagrams over all 2n arcs. The empty diagram maps to 0.
BasedComb base_expand(const ArrowDiagram& a);
BasedComb base_expand(const ArrowComb& a);

/// Reverses every arrow and sends each marking m to K - m.
template <Species S>
Diagram<S> reverse_arrows(const Diagram<S>& d) {
  std::vector<Arrow> arrows(d.arrows().begin(), d.arrows().end());
  for (Arrow& a : arrows) {
    std::swap(a.tail, a.head);
    a.mark = d.K() - a.mark;
  }
  return canonicalize(Diagram<S>(d.K(), std::move(arrows), TrustedTag{}));
}

}  // namespace arrowknot
