#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "arrowknot/frames.hpp"
#include "arrowknot/maps.hpp"
#include "arrowknot/window.hpp"

namespace arrowknot {

/// Raised when normalizing a degenerate diagram would need a marking outside
/// the window.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two endpoints bounding the base arc belong to different arrows.
bool is_nice(const BasedArrow& b);
/// +1 if the two arrows bounding the base arc cross, -1 otherwise. Requires is_nice.
int eta(const BasedArrow& b);
/// Number of arrowheads among the two endpoints bounding the base arc.
int head_count(const BasedArrow& b);
/// eta·(-1)^heads. Requires is_nice.
int epsilon(const BasedArrow& b);

/// 0 if not nice, else epsilon times the diagram with its base shrunk to a point.
DegenerateComb d_based(const BasedArrow& b);
DegenerateComb d_based(const BasedComb& x);

/// A head and a tail of two different arrows meet at the degenerate point.
bool is_monotonic(const DegenerateArrow& d);

/// The two monotonic diagrams a tail-tail or head-head degeneration equals
/// modulo the triangle relations. Requires a two-arrow non-monotonic diagram.
std::pair<DegenerateArrow, DegenerateArrow> triangle_resolutions(const DegenerateArrow& n);
/// Triangle relation vector N - D1 - D2.
DegenerateComb triangle_relation(const DegenerateArrow& n);

/// Rewrites every non-monotonic key into monotonic ones: tail-tail and
/// head-head diagrams by their triangle relation, same-arrow ones to 0.
/// With a window, a rewrite that introduces a marking outside it raises
/// WindowError naming the diagram.
DegenerateComb normalize_triangle(const DegenerateComb& x, const std::optional<MarkingWindow>& window = std::nullopt);

/// d(A) = d(•(A)) in the monotonic basis.
DegenerateComb boundary_d(const ArrowDiagram& a, const std::optional<MarkingWindow>& window = std::nullopt);
DegenerateComb boundary_d(const ArrowComb& a, const std::optional<MarkingWindow>& window = std::nullopt);

/// Based 6-term relation of a monotonic degenerate diagram.
BasedComb based_six_term(const DegenerateArrow& d);

/// (d(B), D) == (B, A6T•(D)) for a based diagram and a monotonic diagram.
bool based_6T_pairing_check(const BasedArrow& b, const DegenerateArrow& d);
/// The two sides of that identity.
std::pair<Rational, Rational> based_6T_pairing_sides(const BasedArrow& b, const DegenerateArrow& d);

}  // namespace arrowknot
