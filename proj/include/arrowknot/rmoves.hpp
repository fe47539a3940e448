#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arrowknot/diagram.hpp"
#include "arrowknot/frames.hpp"

namespace arrowknot {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

const char* move_name(MoveKind k);

class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Where a move acts. Gaps are numbered like arcs: gap p lies right after
/// position p (the empty diagram has the single gap 0).
///   R1Add:    gap
///   R1Remove: arrows = {kink}
///   R2Add:    gap (tails) and gap2 (heads)
///   R2Remove: arrows = {a, b}
///   R3:       arrows = {TM, TB, MB}
struct MoveSite {
  int gap = 0;
  int gap2 = 0;
  std::vector<int> arrows;
};

/// Decorations of inserted arrows.
///   R1Add: sign; tail_first selects the loop (marking K if the tail comes
///          first, 0 otherwise); mark must match.
///   R2Add: sign of the first arrow (the second gets the opposite), common
///          mark, in-gap orders (+1 = first arrow first) and, when both pairs
///          share one gap, heads_first.
struct MoveParams {
  int sign = 1;
  bool tail_first = true;
  Marking mark = 0;
  int tail_order = 1;
  int head_order = 1;
  bool heads_first = false;
};

struct Move {
  MoveKind kind = MoveKind::R1Add;
  MoveSite site;
  MoveParams params;
};

std::string describe(const Move& m);

/// Result with arrow ids preserved: surviving arrows keep their relative
/// order and inserted arrows are appended. Not canonical.
GaussDiagram apply_R_move_raw(const GaussDiagram& g, const Move& m);
/// Canonical result of the move. Throws InvalidMove on a bad site or params.
GaussDiagram apply_R_move(const GaussDiagram& g, const Move& m);

/// Sites of the removal moves and of R3 currently present in `g`.
std::vector<Move> removal_sites(const GaussDiagram& g, MoveKind kind);
std::vector<Move> r3_sites(const GaussDiagram& g);

/// R3 move data for a triangle found in a Gauss diagram, if its signs match
/// its orders.
bool r3_applicable(const FoundTriangle<Species::gauss>& t);

}  // namespace arrowknot
