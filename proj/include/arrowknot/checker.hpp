#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrowknot/formula.hpp"
#include "arrowknot/relations.hpp"

namespace arrowknot {

struct FamilyCheck {
  Family family = Family::AP1;
  std::size_t instances = 0;
  Rational max_abs = 0;      // largest |<f, instance>|
  std::string first_failure;  // formatted instance, empty when passing
  bool pass() const { return is_zero(max_abs); }
};

struct CheckReport {
  std::vector<FamilyCheck> families;  // AP1, AP2, A6T
  DegenerateComb boundary;
  bool d_zero = false;
  /// With AP1 and AP2 satisfied, A6T-orthogonality and d = 0 must agree.
  bool consistent = true;

  const FamilyCheck& family(Family f) const;
  bool r12_invariant() const;
  bool pass() const;
  std::string summary() const;
};

/// Pairs `f` with every AP1, AP2 and A6T instance meeting its support, and
/// computes its boundary. Relation instances are not truncated to any window.
CheckReport check_formula(const Formula& f, const std::optional<MarkingWindow>& window = std::nullopt);

}  // namespace arrowknot
