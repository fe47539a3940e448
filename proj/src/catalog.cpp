#include "arrowknot/catalog.hpp"

#include <stdexcept>

namespace arrowknot {

namespace {

ArrowDiagram two_arrows(Marking K, Arrow x, Arrow y) { return ArrowDiagram(K, {x, y}); }

Arrow arrow(int tail, int head, Marking mark) { return Arrow{tail, head, 0, mark}; }

}  // namespace

Formula length5_formula(Marking K, Marking a) {
  if (a == 0) throw std::invalid_argument("the length-5 formula needs a != 0");
  ArrowComb v;
  v.add(two_arrows(K, arrow(0, 1, 0), arrow(2, 3, a)), Rational(1));
  v.add(two_arrows(K, arrow(0, 1, 0), arrow(3, 2, a)), Rational(1));
  v.add(two_arrows(K, arrow(0, 1, a), arrow(2, 3, K - a)), Rational(-1));
  v.add(two_arrows(K, arrow(0, 2, 0), arrow(1, 3, a)), Rational(1));
  v.add(two_arrows(K, arrow(0, 2, 0), arrow(3, 1, a)), Rational(1));
  return Formula{std::move(v), K, Provenance::file};
}

Formula counterexample_formula(Marking K, Marking m) {
  if (m == 0 || m == K) throw std::invalid_argument("the counterexample needs a marking other than 0 and K");
  ArrowComb v;
  v.add(two_arrows(K, arrow(0, 1, m), arrow(2, 3, m)), Rational(1));
  v.add(two_arrows(K, arrow(0, 1, m), arrow(3, 2, m)), Rational(2));
  v.add(two_arrows(K, arrow(0, 2, m), arrow(1, 3, m)), Rational(2));
  v.add(two_arrows(K, arrow(0, 3, m), arrow(2, 1, m)), Rational(1));
  return Formula{std::move(v), K, Provenance::file};
}

}  // namespace arrowknot
