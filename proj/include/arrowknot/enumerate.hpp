#pragma once

#include <vector>

#include "arrowknot/diagram.hpp"
#include "arrowknot/window.hpp"

namespace arrowknot {

/// Oriented chord configurations on 2n points up to rotation (all markings 0,
/// no signs), canonical and sorted.
std::vector<ArrowDiagram> enumerate_shapes(int n, Marking K);

/// All canonical diagrams of degree n whose markings lie in the window,
/// sorted by encoding. Gauss diagrams range over all sign maps.
template <Species S>
std::vector<Diagram<S>> enumerate_diagrams(int n, const MarkingWindow& window);

}  // namespace arrowknot
