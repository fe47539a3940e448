#include "arrowknot/boundary.hpp"

#include "arrowknot/templates.hpp"

namespace arrowknot {

bool is_nice(const BasedArrow& b) {
  return b.before_base().arrow != b.after_base().arrow;
}

int eta(const BasedArrow& b) {
  const auto& d = b.framed();
  return crosses(d.arrow(b.before_base().arrow), d.arrow(b.after_base().arrow)) ? 1 : -1;
}

int head_count(const BasedArrow& b) {
  return (b.before_base().head ? 1 : 0) + (b.after_base().head ? 1 : 0);
}

int epsilon(const BasedArrow& b) {
  return head_count(b) % 2 == 0 ? eta(b) : -eta(b);
}

DegenerateComb d_based(const BasedArrow& b) {
  DegenerateComb out;
  if (!is_nice(b)) return out;
  out.add(based_to_degenerate(b), Rational(epsilon(b)));
  return out;
}

DegenerateComb d_based(const BasedComb& x) {
  DegenerateComb out;
  for (const auto& [b, c] : x) {
    if (is_nice(b)) out.add(based_to_degenerate(b), c * epsilon(b));
  }
  return out;
}

bool is_monotonic(const DegenerateArrow& d) {
  return d.is_monotonic();
}

namespace {

DegenerateArrow resolved(const TriangleFrame<Species::arrow>& f) {
  const auto r = realize(f, (1u << TM) | (1u << MB), Orders{1, 1, 1});
  return DegenerateArrow(r.diagram, r.slot_first[SegM]);
}

}  // namespace

std::pair<DegenerateArrow, DegenerateArrow> triangle_resolutions(const DegenerateArrow& n) {
  if (n.same_arrow() || n.is_monotonic()) {
    throw std::invalid_argument("triangle_resolutions needs a tail-tail or head-head degeneration");
  }
  const auto frames = frames_of_degenerate(n);
  return {resolved(frames[0].frame), resolved(frames[1].frame)};
}

DegenerateComb triangle_relation(const DegenerateArrow& n) {
  auto [d1, d2] = triangle_resolutions(n);
  DegenerateComb out;
  out.add(n, Rational(1));
  out.add(d1, Rational(-1));
  out.add(d2, Rational(-1));
  return out;
}

DegenerateComb normalize_triangle(const DegenerateComb& x, const std::optional<MarkingWindow>& window) {
  DegenerateComb out;
  for (const auto& [k, c] : x) {
    if (k.same_arrow()) continue;
    if (k.is_monotonic()) {
      out.add_canonical(k, c);
      continue;
    }
    auto [d1, d2] = triangle_resolutions(k);
    if (window) {
      for (const DegenerateArrow* d : {&d1, &d2}) {
        if (!window->admits(d->framed())) {
          throw WindowError("triangle rewrite of " + describe(k) + " leaves the window (" + window->to_string() +
                            "): needs " + describe(*d));
        }
      }
    }
    out.add(d1, c);
    out.add(d2, c);
  }
  return out;
}

DegenerateComb boundary_d(const ArrowDiagram& a, const std::optional<MarkingWindow>& window) {
  return normalize_triangle(d_based(base_expand(a)), window);
}

DegenerateComb boundary_d(const ArrowComb& a, const std::optional<MarkingWindow>& window) {
  return normalize_triangle(d_based(base_expand(a)), window);
}

BasedComb based_six_term(const DegenerateArrow& d) {
  if (!d.is_monotonic()) throw std::invalid_argument("based 6-term relation needs a monotonic diagram");
  return based_six_term(frames_of_degenerate(d).front().frame);
}

std::pair<Rational, Rational> based_6T_pairing_sides(const BasedArrow& b, const DegenerateArrow& d) {
  const DegenerateComb lhs = normalize_triangle(d_based(b));
  const BasedComb rhs = based_six_term(d);
  return {lhs.coeff(d), rhs.coeff(b)};
}

bool based_6T_pairing_check(const BasedArrow& b, const DegenerateArrow& d) {
  auto [l, r] = based_6T_pairing_sides(b, d);
  return l == r;
}

}  // namespace arrowknot
