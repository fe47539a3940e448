#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowknot {

/// Homology class in the annulus: arrow markings and the global marking K.
using Marking = std::int64_t;

enum class Species : std::uint8_t { gauss, arrow };

/// One oriented chord. Endpoint indices are positions 0..2n-1 along the
/// oriented circle. `sign` is +1/-1 on Gauss diagrams and 0 on arrow diagrams.
/// The marking is the class of the circle arc running from the head to the tail.
struct Arrow {
  int tail = 0;
  int head = 0;
  int sign = 0;
  Marking mark = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// The arrow owning a given circle position, and whether that end is its head.
struct Endpoint {
  int arrow = -1;
  bool head = false;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TrustedTag {};

/// Decorated chord diagram on an oriented circle with global marking K.
///
/// Stores raw endpoint positions. Two diagrams that differ by a rotation of the
/// circle compare equal; `canonicalize` produces the representative that all
/// linear combinations are keyed by.
template <Species S>
class Diagram {
 public:
  static constexpr Species species = S;

  Diagram() = default;
  explicit Diagram(Marking K) : K_(K), canonical_(true) {}
  /// Validates the endpoint permutation and the sign field.
  Diagram(Marking K, std::vector<Arrow> arrows);
  /// Skips validation; for internal constructions known to be well formed.
  Diagram(Marking K, std::vector<Arrow> arrows, TrustedTag, bool canonical = false)
      : K_(K), arrows_(std::move(arrows)), canonical_(canonical) {}

  Marking K() const noexcept { return K_; }
  int degree() const noexcept { return static_cast<int>(arrows_.size()); }
  int endpoint_count() const noexcept { return 2 * degree(); }
  std::span<const Arrow> arrows() const noexcept { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(static_cast<std::size_t>(i)); }
  bool is_canonical() const noexcept { return canonical_; }

  /// Position -> owning arrow and role.
  std::vector<Endpoint> endpoints() const;

  /// Relabels every position p as p - r (mod 2n).
  Diagram rotated(int r) const;

  /// The subdiagram on the given arrows; endpoints are compressed keeping
  /// their circular order, markings and K are inherited.
  Diagram induced(std::span<const int> arrow_ids) const;

  /// Lexicographic order of the stored encodings (K, arrows). Meaningful as a
  /// total order on canonical diagrams only.
  std::strong_ordering compare_encoding(const Diagram& other) const;
  bool same_encoding(const Diagram& other) const {
    return K_ == other.K_ && arrows_ == other.arrows_;
  }

  /// Equality up to rotation.
  friend bool operator==(const Diagram& a, const Diagram& b) { return a.equivalent(b); }

 private:
  bool equivalent(const Diagram& other) const;

  Marking K_ = 0;
  std::vector<Arrow> arrows_;
  bool canonical_ = true;
};

using GaussDiagram = Diagram<Species::gauss>;
using ArrowDiagram = Diagram<Species::arrow>;

template <Species S>
struct CanonicalForm {
  Diagram<S> diagram;
  int aut = 1;
};

/// Least token stream over all 2n rotations, arrows re-indexed by first
/// occurrence. Tokens per position: (arrow index, tail/head, marking, sign).
template <Species S>
CanonicalForm<S> canonical_form(const Diagram<S>& d);

template <Species S>
Diagram<S> canonicalize(const Diagram<S>& d) {
  if (d.is_canonical()) return d;
  return canonical_form(d).diagram;
}

/// Number of rotations fixing the diagram; 1 for the empty diagram.
template <Species S>
int aut_order(const Diagram<S>& d) {
  return canonical_form(d).aut;
}

ArrowDiagram forget_signs(const GaussDiagram& g);

/// Decorates arrow i with signs[i] (each +1 or -1). Not canonicalized.
GaussDiagram with_signs(const ArrowDiagram& a, std::span<const int> signs);

/// True when the endpoint pairs of the two arrows interleave on the circle.
bool crosses(const Arrow& x, const Arrow& y) noexcept;

/// Cyclic successor / predecessor of a position on a circle with `size` points.
inline int next_pos(int p, int size) noexcept { return p + 1 == size ? 0 : p + 1; }
inline int prev_pos(int p, int size) noexcept { return p == 0 ? size - 1 : p - 1; }

/// True if going forward from `a` one meets `b` strictly before `c`.
inline bool cyclic_order(int a, int b, int c) noexcept {
  if (a < b) return b < c || c < a;
  return b < c && c < a;
}

template <Species S>
std::string describe(const Diagram<S>& d);

}  // namespace arrowknot
