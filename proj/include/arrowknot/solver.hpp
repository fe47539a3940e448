#pragma once

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "arrowknot/formula.hpp"
#include "arrowknot/ratlinalg.hpp"
#include "arrowknot/relations.hpp"
#include "arrowknot/window.hpp"

namespace arrowknot {

class SolverTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  std::optional<std::string> cache_dir;
  WindowPolicy policy = WindowPolicy::Restricted;
  /// Refuse bases estimated larger than this.
  std::size_t max_columns = 400000;
};

/// Upper estimate of the number of degree-n arrow diagrams over the window.
double estimate_columns(int n, const MarkingWindow& window);

/// Constraint rows <., r> over the degree-n arrow diagrams of the window.
struct ConstraintSystem {
  DiagramIndexedMatrix<ArrowDiagram> matrix;
  std::size_t ap1 = 0;
  std::size_t ap2 = 0;
  std::size_t a6t = 0;
};
ConstraintSystem build_constraints(int n, const MarkingWindow& window, WindowPolicy policy = WindowPolicy::Restricted,
                                   std::size_t max_columns = SIZE_MAX);

/// Basis of the degree-n formulas supported in the window: the common kernel
/// of AP1, AP2 and A6T. Cached under <cache_dir>/<K>/<n>/<hash>.basis.
std::vector<Formula> solve_formula_space(int n, const MarkingWindow& window, const SolveOptions& opts = {});

/// Same space characterized through the boundary: AP1, AP2 and d = 0.
std::vector<Formula> solve_d_kernel(int n, const MarkingWindow& window);

/// Basis of the combinations in the window annihilated by d alone.
std::vector<Formula> solve_d_only(int n, const MarkingWindow& window);

/// Spans coincide (mutual membership).
bool same_span(const std::vector<Formula>& a, const std::vector<Formula>& b);
/// `f` lies in the span of `basis`.
bool in_formula_span(const Formula& f, const std::vector<Formula>& basis);

/// Hash of (window, relation templates); names the cache file.
std::uint64_t solve_cache_hash(int n, const MarkingWindow& window, WindowPolicy policy);
std::string solve_cache_path(const std::string& dir, int n, const MarkingWindow& window, WindowPolicy policy);
/// `flag` if set, else $ARROWKNOT_CACHE_DIR if set.
std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace arrowknot
