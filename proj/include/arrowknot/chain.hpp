#pragma once

#include <vector>

#include "arrowknot/formula.hpp"

namespace arrowknot {

/// Planar naked arrow diagram with its n+1 regions numbered 1..n+1 so that
/// the number increases from the left of every arrow to its right. Arcs are
/// labeled with the number of the region they bound; the presentation is
/// stored in its least rotation.
struct ChainPresentation {
  ArrowDiagram shape;            // K = 0, markings 0
  std::vector<int> arc_region;   // arc k (between positions k and k+1) -> region number

  int degree() const { return shape.degree(); }
};

/// Region number on each side of arrow i: {left, right}.
std::pair<int, int> sides(const ChainPresentation& cp, int arrow);
/// Rechecks planarity, the numbering being a bijection and the increase rule.
bool is_valid_presentation(const ChainPresentation& cp);

/// All chain presentations of degree n up to rotation.
std::vector<ChainPresentation> enumerate_Un(int n);

/// Arrow i gets the sum of gamma over the regions to its left; K = sum of gamma.
ArrowDiagram phi_gamma(const ChainPresentation& cp, const std::vector<Marking>& gamma);

/// Sum of phi_gamma over U_n, coinciding terms merged with multiplicity.
/// Throws std::invalid_argument unless gamma has n+1 nonzero entries.
Formula gv_formula(int n, const std::vector<Marking>& gamma);

}  // namespace arrowknot
