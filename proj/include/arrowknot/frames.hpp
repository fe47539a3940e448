#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arrowknot/based.hpp"

namespace arrowknot {

/// The three arrows of a Reidemeister III configuration, named by the
/// segments holding their tail and head: TM runs from segment T to segment M.
enum TriangleArrow : int { TM = 0, TB = 1, MB = 2 };
/// Segments: T = {TM.tail, TB.tail}, M = {TM.head, MB.tail}, B = {TB.head, MB.head}.
enum Segment : int { SegT = 0, SegM = 1, SegB = 2 };

/// One token of a frame word: a host endpoint, or one of the three segments.
struct FrameToken {
  int arrow = -1;
  bool head = false;
  int slot = -1;
  bool is_slot() const noexcept { return slot >= 0; }
};

using Orders = std::array<int, 3>;

/// A host diagram with three marked points on its circle (the segments) where
/// the visible arrows of a triangle attach. Instantiating a subset of the
/// visible arrows with given in-segment orders realizes one term of the
/// 6-term / 8-term / 2-term relations.
template <Species S>
struct TriangleFrame {
  Marking K = 0;
  std::vector<FrameToken> word;
  std::vector<Arrow> hosts;  // only sign and mark are meaningful
  std::array<Marking, 3> marks{};
  std::array<int, 3> signs{};  // 0 for arrow diagrams

  int host_count() const { return static_cast<int>(hosts.size()); }
  /// Position of each segment in the word.
  std::array<int, 3> slot_index() const;
  /// True when the cyclic order of the segments is T, M, B.
  bool cyclic_tmb() const;
  /// m_TB = m_TM + m_MB - [T,M,B cyclic]·K.
  bool marking_consistent() const;
};

template <Species S>
struct Realized {
  Diagram<S> diagram;
  std::array<int, 3> slot_first{-1, -1, -1};  // position of each segment's first endpoint
};

/// Diagram made of the hosts and the visible arrows selected by `mask`
/// (bit i = TriangleArrow i). `orders[s] = +1` puts, in segment s, the
/// endpoint of the lower-indexed arrow first (TM before TB in T, TM before MB
/// in M, TB before MB in B).
template <Species S>
Realized<S> realize(const TriangleFrame<S>& f, unsigned mask, const Orders& orders);

/// Marking of the missing arrow so that a triangle closes.
Marking closing_marking(TriangleArrow missing, const std::array<Marking, 3>& marks, bool cyclic_tmb, Marking K);

/// Frames of the triangles a two-arrow degenerate diagram belongs to: one
/// frame for a monotonic diagram (the fused point is segment M), two for a
/// tail-tail or head-head meeting, none for a same-arrow degeneration. The
/// arrow that is not present in the degenerate diagram gets sign +1 on Gauss
/// diagrams; `absent` reports which one it is.
template <Species S>
struct DegenerateFrame {
  TriangleFrame<S> frame;
  TriangleArrow absent;
};
template <Species S>
std::vector<DegenerateFrame<S>> frames_of_degenerate(const Degenerate<S>& d);

/// A triangle present in a diagram, with the in-segment orders it is realized with.
template <Species S>
struct FoundTriangle {
  TriangleFrame<S> frame;
  Orders orders{};
  std::array<int, 3> arrows{};  // ids in the source diagram, indexed by TriangleArrow
};

/// All (TM, TB, MB) arrow triples of `d` whose segments are adjacent pairs
/// and whose markings close. Signs are not checked.
template <Species S>
std::vector<FoundTriangle<S>> find_triangles(const Diagram<S>& d);

/// Reidemeister III sign condition on a Gauss triangle with orders `o`:
/// ε_TM·ε_TB = o_M·o_B and ε_TM·ε_MB = o_T·o_B.
bool triangle_signs_valid(const std::array<int, 3>& signs, const Orders& o);

/// In-segment orders of the R3 configuration with these signs (o_T = +1).
Orders orders_for_signs(const std::array<int, 3>& signs);

/// Arrows forming a small loop that Reidemeister I removes: endpoints
/// adjacent and marking K (tail then head) or 0 (head then tail).
template <Species S>
std::vector<int> find_kinks(const Diagram<S>& d);

/// Pairs of arrows with adjacent tails, adjacent heads, equal markings (and
/// opposite signs on Gauss diagrams).
template <Species S>
std::vector<std::pair<int, int>> find_bigons(const Diagram<S>& d);

/// Degenerations of `d` at each pair of consecutive endpoints of two different arrows.
template <Species S>
std::vector<Degenerate<S>> nice_degenerations(const Diagram<S>& d);

/// Diagram with the positions listed in `order` relabeled 0.. in that order.
template <Species S>
Diagram<S> diagram_from_word(Marking K, const std::vector<Endpoint>& word, std::span<const Arrow> decorations);

}  // namespace arrowknot
