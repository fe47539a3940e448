#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arrowknot/maps.hpp"
#include "arrowknot/window.hpp"

namespace arrowknot {

enum class Family {
  P1,
  P2full,
  P3full,
  P2h1,
  P2h2,
  G6T,
  G2T,
  AP1,
  AP2,
  A6T,
  A2T,
  Triangle,
  Based6T,
};

const char* family_name(Family f);
/// Parses the CLI names p1,p2,p3,p2h1,p2h2,g6t,g2t,ap1,ap2,a6t,a2t,triangle,based6t.
Family parse_family(const std::string& name);
std::vector<Family> all_families();
bool is_gauss_family(Family f);

using RelationVector = std::variant<GaussComb, ArrowComb, DegenerateComb, BasedComb>;

struct RelationInstance {
  Family family;
  RelationVector vector;
};

/// How instances with terms outside the window are treated.
///  Closed:     such instances are skipped.
///  Restricted: out-of-window terms are dropped. Exact for the question
///              "which combinations supported in the window pair to zero".
enum class WindowPolicy { Closed, Restricted };

struct GenerationReport {
  std::vector<RelationInstance> instances;
  std::size_t skipped = 0;    // Closed: instances left out
  std::size_t truncated = 0;  // Restricted: instances that lost terms
};

/// Every instance of `family` of degree n (the top degree for P2full and
/// P3full) that has at least one term in the window, deduplicated up to
/// scalar with the least key's coefficient normalized to 1.
GenerationReport gen_family(Family family, int n, const MarkingWindow& window,
                            WindowPolicy policy = WindowPolicy::Restricted);

/// AP1, AP2 and A6T instances of degree n: the constraints whose common
/// kernel is the space of formulas.
std::vector<RelationInstance> gen_all_constraints(int n, const MarkingWindow& window,
                                                  WindowPolicy policy = WindowPolicy::Restricted);

/// Instances of an arrow family that contain the diagram `x`, unrestricted.
/// Supported families: AP1, AP2, A6T, A2T.
std::vector<ArrowComb> arrow_instances_containing(Family family, const ArrowDiagram& x);
/// Same for Gauss families: P1, P2full, P3full, P2h1, P2h2, G6T, G2T.
std::vector<GaussComb> gauss_instances_containing(Family family, const GaussDiagram& x);

/// Adjoint of S on one vector: sum of r_X·sign(X)·forget(X). Then
/// <S(a), r> = <a, adjoint(r)> for every arrow combination a.
ArrowComb adjoint_S(const GaussComb& r);

struct SpanCompatReport {
  std::size_t r_instances = 0;
  std::size_t p_instances = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing R-relation, if any
  bool pass() const { return failures == 0; }
};

/// For every R-move between two Gauss diagrams of degree <= n in the window,
/// checks that I(after - before) lies in the span of the P-relation instances
/// of degree <= n that lie entirely in the window.
SpanCompatReport check_I_span_compat(int n, const MarkingWindow& window);

}  // namespace arrowknot
