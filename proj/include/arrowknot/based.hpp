#pragma once

#include <compare>
#include <string>
#include <utility>

#include "arrowknot/diagram.hpp"

namespace arrowknot {

/// Diagram with a distinguished arc. Stored in its canonical frame: the base
/// arc sits between positions 2n-1 and 0 and arrows are numbered by first
/// occurrence, so a based diagram has no automorphisms.
template <Species S>
class Based {
 public:
  /// `base_arc` is the arc between positions base_arc and base_arc+1 (mod 2n).
  /// Throws ValidationError for the empty diagram, which has no arcs.
  Based(const Diagram<S>& d, int base_arc);

  const Diagram<S>& framed() const noexcept { return framed_; }
  Diagram<S> underlying() const { return canonicalize(framed_); }
  int degree() const noexcept { return framed_.degree(); }
  Marking K() const noexcept { return framed_.K(); }

  /// Endpoints bounding the base arc: the one before it and the one after it.
  Endpoint before_base() const;
  Endpoint after_base() const;

  std::strong_ordering compare_encoding(const Based& o) const {
    return framed_.compare_encoding(o.framed_);
  }
  friend bool operator==(const Based& a, const Based& b) { return a.framed_.same_encoding(b.framed_); }

 private:
  Based() = default;
  Diagram<S> framed_;
  template <Species>
  friend class Degenerate;
};

/// Diagram with the arc between two consecutive endpoints shrunk to a point.
/// The pair (first, second) records which endpoint came first, so this type
/// is in bijection with Based. Stored in the same frame: the fused endpoints
/// are positions 2n-1 (first) and 0 (second).
template <Species S>
class Degenerate {
 public:
  /// Fuses positions `first` and `first + 1` (mod 2n).
  Degenerate(const Diagram<S>& d, int first);

  const Diagram<S>& framed() const noexcept { return framed_; }
  int degree() const noexcept { return framed_.degree(); }
  Marking K() const noexcept { return framed_.K(); }

  Endpoint first() const;
  Endpoint second() const;
  bool same_arrow() const { return first().arrow == second().arrow; }
  /// Head and tail of two different arrows meet at the degenerate point.
  bool is_monotonic() const;

  /// The same degeneration with the two fused endpoints listed in the other order.
  Degenerate swapped() const;

  std::strong_ordering compare_encoding(const Degenerate& o) const {
    return framed_.compare_encoding(o.framed_);
  }
  friend bool operator==(const Degenerate& a, const Degenerate& b) {
    return a.framed_.same_encoding(b.framed_);
  }

 private:
  explicit Degenerate(Diagram<S> framed) : framed_(std::move(framed)) {}
  Diagram<S> framed_;
  template <Species T>
  friend Degenerate<T> based_to_degenerate(const Based<T>&);
  template <Species T>
  friend Based<T> degenerate_to_based(const Degenerate<T>&);
};

using BasedArrow = Based<Species::arrow>;
using DegenerateArrow = Degenerate<Species::arrow>;

template <Species S>
Degenerate<S> based_to_degenerate(const Based<S>& b);
template <Species S>
Based<S> degenerate_to_based(const Degenerate<S>& d);

/// Based diagrams are canonical by construction.
template <Species S>
Based<S> canonical_key(const Based<S>& b) {
  return b;
}

/// Class of a degenerate diagram in the space of degenerate diagrams: the
/// order of two fused endpoints of different arrows is forgotten (the least
/// encoding of the two orders represents the class); for an arrow fused with
/// itself the order is kept.
template <Species S>
Degenerate<S> canonical_key(const Degenerate<S>& d) {
  if (d.same_arrow()) return d;
  Degenerate<S> s = d.swapped();
  return s.compare_encoding(d) < 0 ? s : d;
}

/// Re-frames `d` so that positions are read starting at `start`, then numbers
/// arrows by first occurrence. Used for based/degenerate frames.
template <Species S>
Diagram<S> reframe(const Diagram<S>& d, int start);

template <Species S>
std::string describe(const Based<S>& b);
template <Species S>
std::string describe(const Degenerate<S>& d);

}  // namespace arrowknot
