#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrowknot/frames.hpp"
#include "arrowknot/lincomb.hpp"
#include "arrowknot/maps.hpp"

namespace arrowknot {

/// One term of a triangle relation template.
///
/// `mask` selects the visible arrows (bit i = TriangleArrow i). When
/// `segment >= 0` the term is the resolution of that segment with in-segment
/// order `order`; otherwise every segment takes `order` times the frame's
/// reference orders. The coefficient is `coef`, times the sign of arrow
/// `sign_of` when that is >= 0.
struct TemplateTerm {
  unsigned mask;
  int segment;
  int order;
  int coef;
  int sign_of;
};

struct TriangleTemplate {
  std::string family;
  std::vector<TemplateTerm> terms;
};

/// Arrow 6-term relation: the two resolutions of each segment, with
/// opposite coefficients. Also used, based at the resolved segment, for the
/// based 6-term relation.
const TriangleTemplate& six_term_arrow();
/// Gauss 6-term relation: each segment difference weighted by the sign of
/// the arrow not touching that segment.
const TriangleTemplate& six_term_gauss();
/// Polyak 8-term relation: the difference of the two sides of an R3 move
/// over every subset of at least two visible arrows.
const TriangleTemplate& eight_term();
/// 2-term relation: the full triangle in both orientations.
const TriangleTemplate& two_term();

template <Species S>
LinComb<Diagram<S>> apply_template(const TriangleTemplate& t, const TriangleFrame<S>& f, const Orders& reference);

/// Based 6-term relation of the monotonic degenerate diagram framed by `f`
/// (its fused point is segment M): each term of the arrow 6-term relation,
/// based between its resolved pair, times +1 if the segments read T, M, B
/// cyclically and -1 otherwise.
BasedComb based_six_term(const TriangleFrame<Species::arrow>& f);

/// Text of every template table (including the conventions used by the
/// single-diagram families and the R-moves); hashed into solver cache keys.
std::string template_table_text();
std::uint64_t template_hash();

}  // namespace arrowknot
