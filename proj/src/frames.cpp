#include "arrowknot/frames.hpp"

namespace arrowknot {

namespace {

// Which segment holds each end of each visible arrow: [arrow][head?].
constexpr int kSlotOf[3][2] = {{SegT, SegM}, {SegT, SegB}, {SegM, SegB}};

// Endpoints of a segment in "order +1": the lower-indexed arrow first.
struct SlotEnd {
  int arrow;
  bool head;
};
constexpr SlotEnd kSlotEnds[3][2] = {
    {{TM, false}, {TB, false}},
    {{TM, true}, {MB, false}},
    {{TB, true}, {MB, true}},
};

template <Species S>
TriangleFrame<S> build_frame(const Diagram<S>& d, int fused_slot, const std::array<int, 3>& role_arrow) {
  // role_arrow[r] = arrow id of d playing role r, or -1 if absent.
  std::vector<int> role_of(static_cast<std::size_t>(d.degree()), -1);
  for (int r = 0; r < 3; ++r) {
    if (role_arrow[static_cast<std::size_t>(r)] >= 0) role_of[static_cast<std::size_t>(role_arrow[static_cast<std::size_t>(r)])] = r;
  }
  TriangleFrame<S> f;
  f.K = d.K();
  std::vector<int> host_id(static_cast<std::size_t>(d.degree()), -1);
  const auto ends = d.endpoints();
  const int size = d.endpoint_count();
  f.word.push_back(FrameToken{-1, false, fused_slot});
  for (int p = 1; p + 1 < size; ++p) {
    const Endpoint& e = ends[static_cast<std::size_t>(p)];
    const int role = role_of[static_cast<std::size_t>(e.arrow)];
    if (role >= 0) {
      f.word.push_back(FrameToken{-1, false, kSlotOf[role][e.head ? 1 : 0]});
      continue;
    }
    int& id = host_id[static_cast<std::size_t>(e.arrow)];
    if (id < 0) {
      id = f.host_count();
      f.hosts.push_back(d.arrow(e.arrow));
    }
    f.word.push_back(FrameToken{id, e.head, -1});
  }
  int absent = -1;
  for (int r = 0; r < 3; ++r) {
    const int a = role_arrow[static_cast<std::size_t>(r)];
    if (a < 0) {
      absent = r;
      f.signs[static_cast<std::size_t>(r)] = S == Species::gauss ? 1 : 0;
    } else {
      f.marks[static_cast<std::size_t>(r)] = d.arrow(a).mark;
      f.signs[static_cast<std::size_t>(r)] = d.arrow(a).sign;
    }
  }
  f.marks[static_cast<std::size_t>(absent)] =
      closing_marking(static_cast<TriangleArrow>(absent), f.marks, f.cyclic_tmb(), f.K);
  return f;
}

}  // namespace

template <Species S>
std::array<int, 3> TriangleFrame<S>::slot_index() const {
  std::array<int, 3> idx{-1, -1, -1};
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].is_slot()) idx[static_cast<std::size_t>(word[i].slot)] = static_cast<int>(i);
  }
  return idx;
}

template <Species S>
bool TriangleFrame<S>::cyclic_tmb() const {
  const auto idx = slot_index();
  return cyclic_order(idx[SegT], idx[SegM], idx[SegB]);
}

template <Species S>
bool TriangleFrame<S>::marking_consistent() const {
  return marks[TB] == marks[TM] + marks[MB] - (cyclic_tmb() ? K : 0);
}

Marking closing_marking(TriangleArrow missing, const std::array<Marking, 3>& m, bool cyclic_tmb, Marking K) {
  const Marking c = cyclic_tmb ? K : 0;
  switch (missing) {
    case TB:
      return m[TM] + m[MB] - c;
    case MB:
      return m[TB] - m[TM] + c;
    case TM:
      return m[TB] - m[MB] + c;
  }
  return 0;
}

template <Species S>
Realized<S> realize(const TriangleFrame<S>& f, unsigned mask, const Orders& orders) {
  std::array<int, 3> visible_id{-1, -1, -1};
  std::vector<Arrow> arrows;
  arrows.reserve(f.hosts.size() + 3);
  for (const Arrow& h : f.hosts) arrows.push_back(Arrow{-1, -1, h.sign, h.mark});
  for (int r = 0; r < 3; ++r) {
    if (mask & (1u << r)) {
      visible_id[static_cast<std::size_t>(r)] = static_cast<int>(arrows.size());
      arrows.push_back(Arrow{-1, -1, f.signs[static_cast<std::size_t>(r)], f.marks[static_cast<std::size_t>(r)]});
    }
  }
  Realized<S> out;
  int pos = 0;
  auto place = [&](int id, bool head) {
    Arrow& a = arrows[static_cast<std::size_t>(id)];
    (head ? a.head : a.tail) = pos++;
  };
  for (const FrameToken& t : f.word) {
    if (!t.is_slot()) {
      place(t.arrow, t.head);
      continue;
    }
    const int s = t.slot;
    const bool forward = orders[static_cast<std::size_t>(s)] > 0;
    for (int k = 0; k < 2; ++k) {
      const SlotEnd& e = kSlotEnds[s][forward ? k : 1 - k];
      const int id = visible_id[static_cast<std::size_t>(e.arrow)];
      if (id < 0) continue;
      if (out.slot_first[static_cast<std::size_t>(s)] < 0) out.slot_first[static_cast<std::size_t>(s)] = pos;
      place(id, e.head);
    }
  }
  out.diagram = Diagram<S>(f.K, std::move(arrows), TrustedTag{});
  return out;
}

template <Species S>
std::vector<DegenerateFrame<S>> frames_of_degenerate(const Degenerate<S>& d) {
  std::vector<DegenerateFrame<S>> out;
  if (d.same_arrow()) return out;
  const Endpoint x = d.first();
  const Endpoint y = d.second();
  const Diagram<S>& g = d.framed();
  if (x.head != y.head) {
    const int a = x.head ? x.arrow : y.arrow;
    const int b = x.head ? y.arrow : x.arrow;
    out.push_back({build_frame(g, SegM, {a, -1, b}), TB});
  } else if (!x.head) {
    out.push_back({build_frame(g, SegT, {x.arrow, y.arrow, -1}), MB});
    out.push_back({build_frame(g, SegT, {y.arrow, x.arrow, -1}), MB});
  } else {
    out.push_back({build_frame(g, SegB, {-1, x.arrow, y.arrow}), TM});
    out.push_back({build_frame(g, SegB, {-1, y.arrow, x.arrow}), TM});
  }
  return out;
}

template <Species S>
std::vector<FoundTriangle<S>> find_triangles(const Diagram<S>& d) {
  std::vector<FoundTriangle<S>> out;
  const int n = d.degree();
  const int size = d.endpoint_count();
  if (n < 3) return out;
  auto first_of = [&](int p, int q) -> int {
    if (next_pos(p, size) == q) return p;
    if (next_pos(q, size) == p) return q;
    return -1;
  };
  const auto ends = d.endpoints();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        const Arrow& A = d.arrow(a);
        const Arrow& B = d.arrow(b);
        const Arrow& C = d.arrow(c);
        const int ft = first_of(A.tail, B.tail);
        const int fm = first_of(A.head, C.tail);
        const int fb = first_of(B.head, C.head);
        if (ft < 0 || fm < 0 || fb < 0) continue;
        FoundTriangle<S> found;
        found.arrows = {a, b, c};
        found.orders = {ft == A.tail ? 1 : -1, fm == A.head ? 1 : -1, fb == B.head ? 1 : -1};
        TriangleFrame<S>& f = found.frame;
        f.K = d.K();
        f.marks = {A.mark, B.mark, C.mark};
        f.signs = {A.sign, B.sign, C.sign};
        std::vector<int> host_id(static_cast<std::size_t>(n), -1);
        for (int k = 0; k < size; ++k) {
          const int p = (ft + k) % size;
          if (p == ft || p == fm || p == fb) {
            f.word.push_back(FrameToken{-1, false, p == ft ? SegT : (p == fm ? SegM : SegB)});
            continue;
          }
          const Endpoint& e = ends[static_cast<std::size_t>(p)];
          if (e.arrow == a || e.arrow == b || e.arrow == c) continue;
          int& id = host_id[static_cast<std::size_t>(e.arrow)];
          if (id < 0) {
            id = f.host_count();
            f.hosts.push_back(d.arrow(e.arrow));
          }
          f.word.push_back(FrameToken{id, e.head, -1});
        }
        if (f.marking_consistent()) out.push_back(std::move(found));
      }
    }
  }
  return out;
}

bool triangle_signs_valid(const std::array<int, 3>& s, const Orders& o) {
  return s[TM] * s[TB] == o[SegM] * o[SegB] && s[TM] * s[MB] == o[SegT] * o[SegB];
}

Orders orders_for_signs(const std::array<int, 3>& s) {
  const int sigma = s[TM] * s[TB] * s[MB];
  return {1, sigma * s[TM], sigma * s[TB]};
}

template <Species S>
std::vector<int> find_kinks(const Diagram<S>& d) {
  std::vector<int> out;
  const int size = d.endpoint_count();
  for (int i = 0; i < d.degree(); ++i) {
    const Arrow& a = d.arrow(i);
    const bool tail_first = next_pos(a.tail, size) == a.head && a.mark == d.K();
    const bool head_first = next_pos(a.head, size) == a.tail && a.mark == 0;
    if (tail_first || head_first) out.push_back(i);
  }
  return out;
}

template <Species S>
std::vector<std::pair<int, int>> find_bigons(const Diagram<S>& d) {
  std::vector<std::pair<int, int>> out;
  const int size = d.endpoint_count();
  auto adjacent = [&](int p, int q) { return next_pos(p, size) == q || next_pos(q, size) == p; };
  for (int i = 0; i < d.degree(); ++i) {
    for (int j = i + 1; j < d.degree(); ++j) {
      const Arrow& a = d.arrow(i);
      const Arrow& b = d.arrow(j);
      if (a.mark != b.mark || a.sign != -b.sign) continue;
      if (adjacent(a.tail, b.tail) && adjacent(a.head, b.head)) out.emplace_back(i, j);
    }
  }
  return out;
}

template <Species S>
std::vector<Degenerate<S>> nice_degenerations(const Diagram<S>& d) {
  std::vector<Degenerate<S>> out;
  const int size = d.endpoint_count();
  const auto ends = d.endpoints();
  for (int p = 0; p < size; ++p) {
    if (ends[static_cast<std::size_t>(p)].arrow != ends[static_cast<std::size_t>(next_pos(p, size))].arrow) {
      out.emplace_back(d, p);
    }
  }
  return out;
}

template <Species S>
Diagram<S> diagram_from_word(Marking K, const std::vector<Endpoint>& word, std::span<const Arrow> decorations) {
  std::vector<Arrow> arrows(decorations.begin(), decorations.end());
  for (std::size_t p = 0; p < word.size(); ++p) {
    Arrow& a = arrows[static_cast<std::size_t>(word[p].arrow)];
    (word[p].head ? a.head : a.tail) = static_cast<int>(p);
  }
  return Diagram<S>(K, std::move(arrows));
}

#define ARROWKNOT_INSTANTIATE(S)                                                              \
  template struct TriangleFrame<S>;                                                           \
  template Realized<S> realize(const TriangleFrame<S>&, unsigned, const Orders&);              \
  template std::vector<DegenerateFrame<S>> frames_of_degenerate(const Degenerate<S>&);        \
  template std::vector<FoundTriangle<S>> find_triangles(const Diagram<S>&);                   \
  template std::vector<int> find_kinks(const Diagram<S>&);                                    \
  template std::vector<std::pair<int, int>> find_bigons(const Diagram<S>&);                   \
  template std::vector<Degenerate<S>> nice_degenerations(const Diagram<S>&);                  \
  template Diagram<S> diagram_from_word(Marking, const std::vector<Endpoint>&, std::span<const Arrow>);

ARROWKNOT_INSTANTIATE(Species::gauss)
ARROWKNOT_INSTANTIATE(Species::arrow)

#undef ARROWKNOT_INSTANTIATE

}  // namespace arrowknot
