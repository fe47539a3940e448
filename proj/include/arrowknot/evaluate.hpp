#pragma once

#include "arrowknot/formula.hpp"

namespace arrowknot {

/// Value of the formula on a Gauss diagram, <S(f), I(g)>, computed as the
/// sum of coef·<<A, g>> over the terms. Throws std::invalid_argument on a K mismatch.
Rational evaluate(const Formula& f, const GaussDiagram& g);

/// Same value by expanding S and I; exponential, for testing.
Rational evaluate_naive(const Formula& f, const GaussDiagram& g);

}  // namespace arrowknot
