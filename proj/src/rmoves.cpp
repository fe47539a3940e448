#include "arrowknot/rmoves.hpp"

#include <algorithm>

namespace arrowknot {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add:
      return "R1+";
    case MoveKind::R1Remove:
      return "R1-";
    case MoveKind::R2Add:
      return "R2+";
    case MoveKind::R2Remove:
      return "R2-";
    case MoveKind::R3:
      return "R3";
  }
  return "?";
}

std::string describe(const Move& m) {
  std::string out = move_name(m.kind);
  switch (m.kind) {
    case MoveKind::R1Add:
      out += " gap=" + std::to_string(m.site.gap) + " sign=" + (m.params.sign > 0 ? "+" : "-") +
             " mark=" + std::to_string(m.params.mark);
      break;
    case MoveKind::R2Add:
      out += " tails@" + std::to_string(m.site.gap) + " heads@" + std::to_string(m.site.gap2) +
             " mark=" + std::to_string(m.params.mark);
      break;
    default:
      out += " arrows=";
      for (std::size_t i = 0; i < m.site.arrows.size(); ++i) out += (i ? "," : "") + std::to_string(m.site.arrows[i]);
  }
  return out;
}

namespace {

void check_gap(const GaussDiagram& g, int gap) {
  const int size = g.endpoint_count();
  if (gap < 0 || gap >= std::max(size, 1)) throw InvalidMove("gap " + std::to_string(gap) + " out of range");
}

void check_arrows(const GaussDiagram& g, const std::vector<int>& ids, std::size_t count) {
  if (ids.size() != count) throw InvalidMove("wrong number of arrows for the move");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= g.degree()) throw InvalidMove("arrow " + std::to_string(ids[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (ids[i] == ids[j]) throw InvalidMove("repeated arrow in move site");
    }
  }
}

// Builds the circle word of g with extra endpoints inserted after given gaps.
GaussDiagram insert_endpoints(const GaussDiagram& g, const std::vector<std::vector<Endpoint>>& after_gap,
                              const std::vector<Arrow>& extra) {
  std::vector<Endpoint> word;
  const auto ends = g.endpoints();
  const int size = g.endpoint_count();
  for (int p = 0; p < std::max(size, 1); ++p) {
    if (p < size) word.push_back(ends[static_cast<std::size_t>(p)]);
    for (const Endpoint& e : after_gap[static_cast<std::size_t>(p)]) word.push_back(e);
  }
  std::vector<Arrow> decorations(g.arrows().begin(), g.arrows().end());
  decorations.insert(decorations.end(), extra.begin(), extra.end());
  return diagram_from_word<Species::gauss>(g.K(), word, decorations);
}

GaussDiagram remove_arrows(const GaussDiagram& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<int> keep;
  for (int i = 0; i < g.degree(); ++i) {
    if (!std::binary_search(ids.begin(), ids.end(), i)) keep.push_back(i);
  }
  GaussDiagram out = g.induced(keep);
  return GaussDiagram(out.K(), std::vector<Arrow>(out.arrows().begin(), out.arrows().end()), TrustedTag{});
}

}  // namespace

bool r3_applicable(const FoundTriangle<Species::gauss>& t) {
  return triangle_signs_valid(t.frame.signs, t.orders);
}

GaussDiagram apply_R_move_raw(const GaussDiagram& g, const Move& m) {
  const int n = g.degree();
  const int size = g.endpoint_count();
  const MoveParams& p = m.params;
  switch (m.kind) {
    case MoveKind::R1Add: {
      check_gap(g, m.site.gap);
      if (p.sign != 1 && p.sign != -1) throw InvalidMove("R1 sign must be +1 or -1");
      const Marking need = p.tail_first ? g.K() : 0;
      if (p.mark != need) {
        throw InvalidMove("R1 marking must be " + std::to_string(need) + " for this loop, got " + std::to_string(p.mark));
      }
      std::vector<std::vector<Endpoint>> after(static_cast<std::size_t>(std::max(size, 1)));
      after[static_cast<std::size_t>(m.site.gap)] = {Endpoint{n, !p.tail_first}, Endpoint{n, p.tail_first}};
      return insert_endpoints(g, after, {Arrow{0, 0, p.sign, p.mark}});
    }
    case MoveKind::R1Remove: {
      check_arrows(g, m.site.arrows, 1);
      const auto kinks = find_kinks(g);
      if (std::find(kinks.begin(), kinks.end(), m.site.arrows[0]) == kinks.end()) {
        throw InvalidMove("arrow " + std::to_string(m.site.arrows[0]) + " is not a removable loop");
      }
      return remove_arrows(g, m.site.arrows);
    }
    case MoveKind::R2Add: {
      check_gap(g, m.site.gap);
      check_gap(g, m.site.gap2);
      if (p.sign != 1 && p.sign != -1) throw InvalidMove("R2 sign must be +1 or -1");
      if (std::abs(p.tail_order) != 1 || std::abs(p.head_order) != 1) throw InvalidMove("R2 orders must be +1 or -1");
      std::vector<Endpoint> tails{Endpoint{n, false}, Endpoint{n + 1, false}};
      std::vector<Endpoint> heads{Endpoint{n, true}, Endpoint{n + 1, true}};
      if (p.tail_order < 0) std::swap(tails[0], tails[1]);
      if (p.head_order < 0) std::swap(heads[0], heads[1]);
      std::vector<std::vector<Endpoint>> after(static_cast<std::size_t>(std::max(size, 1)));
      auto& tg = after[static_cast<std::size_t>(m.site.gap)];
      auto& hg = after[static_cast<std::size_t>(m.site.gap2)];
      if (m.site.gap == m.site.gap2 && p.heads_first) {
        tg = heads;
        tg.insert(tg.end(), tails.begin(), tails.end());
      } else {
        tg.insert(tg.end(), tails.begin(), tails.end());
        hg.insert(hg.end(), heads.begin(), heads.end());
      }
      return insert_endpoints(g, after, {Arrow{0, 0, p.sign, p.mark}, Arrow{0, 0, -p.sign, p.mark}});
    }
    case MoveKind::R2Remove: {
      check_arrows(g, m.site.arrows, 2);
      const auto bigons = find_bigons(g);
      const int a = std::min(m.site.arrows[0], m.site.arrows[1]);
      const int b = std::max(m.site.arrows[0], m.site.arrows[1]);
      if (std::find(bigons.begin(), bigons.end(), std::pair{a, b}) == bigons.end()) {
        throw InvalidMove("arrows " + std::to_string(a) + "," + std::to_string(b) + " do not form a removable bigon");
      }
      return remove_arrows(g, m.site.arrows);
    }
    case MoveKind::R3: {
      check_arrows(g, m.site.arrows, 3);
      for (const auto& t : find_triangles(g)) {
        if (t.arrows[0] != m.site.arrows[0] || t.arrows[1] != m.site.arrows[1] || t.arrows[2] != m.site.arrows[2]) {
          continue;
        }
        if (!r3_applicable(t)) throw InvalidMove("R3 signs do not match the triangle orientation");
        std::vector<Arrow> arrows(g.arrows().begin(), g.arrows().end());
        Arrow& a = arrows[static_cast<std::size_t>(t.arrows[TM])];
        Arrow& b = arrows[static_cast<std::size_t>(t.arrows[TB])];
        Arrow& c = arrows[static_cast<std::size_t>(t.arrows[MB])];
        std::swap(a.tail, b.tail);
        std::swap(a.head, c.tail);
        std::swap(b.head, c.head);
        return GaussDiagram(g.K(), std::move(arrows), TrustedTag{});
      }
      throw InvalidMove("arrows do not form an R3 triangle (TM, TB, MB)");
    }
  }
  throw InvalidMove("unknown move");
}

GaussDiagram apply_R_move(const GaussDiagram& g, const Move& m) {
  return canonicalize(apply_R_move_raw(g, m));
}

std::vector<Move> removal_sites(const GaussDiagram& g, MoveKind kind) {
  std::vector<Move> out;
  if (kind == MoveKind::R1Remove) {
    for (int k : find_kinks(g)) out.push_back(Move{kind, MoveSite{0, 0, {k}}, {}});
  } else if (kind == MoveKind::R2Remove) {
    for (auto [a, b] : find_bigons(g)) out.push_back(Move{kind, MoveSite{0, 0, {a, b}}, {}});
  }
  return out;
}

std::vector<Move> r3_sites(const GaussDiagram& g) {
  std::vector<Move> out;
  for (const auto& t : find_triangles(g)) {
    if (r3_applicable(t)) out.push_back(Move{MoveKind::R3, MoveSite{0, 0, {t.arrows[0], t.arrows[1], t.arrows[2]}}, {}});
  }
  return out;
}

}  // namespace arrowknot
