#include "arrowknot/checker.hpp"

#include <set>
#include <sstream>

#include "arrowknot/boundary.hpp"
#include "arrowknot/text_io.hpp"

namespace arrowknot {

namespace {

FamilyCheck check_family(const Formula& f, Family family) {
  FamilyCheck out;
  out.family = family;
  auto less = [](const ArrowComb& a, const ArrowComb& b) { return compare(a, b) < 0; };
  std::set<ArrowComb, decltype(less)> seen(less);
  for (const auto& [d, c] : f.vector) {
    for (const ArrowComb& inst : arrow_instances_containing(family, d)) {
      if (!seen.insert(inst.normalized()).second) continue;
      ++out.instances;
      Rational p = pair_norm(f.vector, inst);
      if (p < 0) p = -p;
      if (p > out.max_abs) {
        if (out.first_failure.empty()) out.first_failure = format_lincomb(inst);
        out.max_abs = p;
      }
    }
  }
  return out;
}

}  // namespace

const FamilyCheck& CheckReport::family(Family f) const {
  for (const FamilyCheck& fc : families) {
    if (fc.family == f) return fc;
  }
  throw std::invalid_argument(std::string("family not checked: ") + family_name(f));
}

bool CheckReport::r12_invariant() const { return family(Family::AP1).pass() && family(Family::AP2).pass(); }

bool CheckReport::pass() const {
  for (const FamilyCheck& fc : families) {
    if (!fc.pass()) return false;
  }
  return d_zero && consistent;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const FamilyCheck& fc : families) {
    os << family_name(fc.family) << ": instances=" << fc.instances << " max|<f,r>|=" << to_fraction_string(fc.max_abs)
       << (fc.pass() ? " ok" : " FAIL") << "\n";
  }
  os << "d: terms=" << boundary.size() << (d_zero ? " zero" : " nonzero") << "\n";
  os << "consistency: " << (consistent ? "ok" : "MISMATCH between A6T and d") << "\n";
  return os.str();
}

CheckReport check_formula(const Formula& f, const std::optional<MarkingWindow>& window) {
  CheckReport r;
  for (Family fam : {Family::AP1, Family::AP2, Family::A6T}) r.families.push_back(check_family(f, fam));
  r.boundary = boundary_d(f.vector, window);
  r.d_zero = r.boundary.is_zero();
  if (r.r12_invariant()) r.consistent = r.family(Family::A6T).pass() == r.d_zero;
  return r;
}

}  // namespace arrowknot
