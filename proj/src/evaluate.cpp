#include "arrowknot/evaluate.hpp"

#include <stdexcept>

namespace arrowknot {

namespace {

void require_same_K(const Formula& f, const GaussDiagram& g) {
  if (f.K != g.K()) {
    throw std::invalid_argument("formula has K=" + std::to_string(f.K) + " but the diagram has K=" + std::to_string(g.K()));
  }
}

}  // namespace

Rational evaluate(const Formula& f, const GaussDiagram& g) {
  require_same_K(f, g);
  return double_angle(f.vector, g);
}

Rational evaluate_naive(const Formula& f, const GaussDiagram& g) {
  require_same_K(f, g);
  return pair_norm(sign_expand_S(f.vector), subdiagram_expand_I(g));
}

}  // namespace arrowknot
