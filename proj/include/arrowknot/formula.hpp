#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arrowknot/maps.hpp"

namespace arrowknot {

enum class Provenance { solver, gv, file };

const char* provenance_name(Provenance p);

/// Arrow diagram formula: the invariant G -> <S(A), I(G)>.
struct Formula {
  ArrowComb vector;
  Marking K = 0;
  Provenance provenance = Provenance::file;

  /// Degrees carrying a nonzero coefficient.
  std::set<int> degrees() const;
  bool is_zero() const { return vector.is_zero(); }
};

/// Throws std::invalid_argument when a key disagrees with K.
Formula make_formula(ArrowComb v, Marking K, Provenance p);

/// "formula K=<K> provenance=<p>" followed by the combination.
std::string format_formula(const Formula& f);
Formula parse_formula(std::string_view text);

/// Several formulas separated by "===" lines; '#' lines carry metadata.
std::string format_basis(const std::vector<Formula>& basis, std::string_view comment = {});
std::vector<Formula> parse_basis(std::string_view text);

/// Splits by degree; the zero formula has no components.
std::vector<Formula> homogeneous_components(const Formula& f);

}  // namespace arrowknot
