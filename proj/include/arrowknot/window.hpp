#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrowknot/diagram.hpp"

namespace arrowknot {

/// Finite set of markings that generated diagrams may carry, with the global
/// marking K they are taken relative to.
class MarkingWindow {
 public:
  MarkingWindow() = default;
  MarkingWindow(Marking K, std::vector<Marking> allowed);

  /// Accepts "lo..hi" or a comma separated list such as "1,2,5".
  static MarkingWindow parse(Marking K, std::string_view text);

  Marking K() const noexcept { return K_; }
  const std::vector<Marking>& allowed() const noexcept { return allowed_; }
  bool empty() const noexcept { return allowed_.empty(); }
  bool contains(Marking m) const;
  /// Every arrow marking of `d` lies in the window (and K matches).
  template <Species S>
  bool admits(const Diagram<S>& d) const {
    if (d.K() != K_) return false;
    for (const Arrow& a : d.arrows()) {
      if (!contains(a.mark)) return false;
    }
    return true;
  }
  /// Closed under x -> K - x.
  bool reflection_closed() const;
  std::string to_string() const;

  friend bool operator==(const MarkingWindow&, const MarkingWindow&) = default;

 private:
  Marking K_ = 0;
  std::vector<Marking> allowed_;
};

}  // namespace arrowknot
