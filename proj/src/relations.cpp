#include "arrowknot/relations.hpp"

#include <set>
#include <stdexcept>

#include "arrowknot/boundary.hpp"
#include "arrowknot/enumerate.hpp"
#include "arrowknot/ratlinalg.hpp"
#include "arrowknot/rmoves.hpp"
#include "arrowknot/templates.hpp"

namespace arrowknot {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::P1, "p1"},     {Family::P2full, "p2"}, {Family::P3full, "p3"},         {Family::P2h1, "p2h1"},
    {Family::P2h2, "p2h2"}, {Family::G6T, "g6t"},   {Family::G2T, "g2t"},           {Family::AP1, "ap1"},
    {Family::AP2, "ap2"},   {Family::A6T, "a6t"},   {Family::A2T, "a2t"},           {Family::Triangle, "triangle"},
    {Family::Based6T, "based6t"},
};

template <class Key>
struct CombLess {
  bool operator()(const LinComb<Key>& a, const LinComb<Key>& b) const { return compare(a, b) < 0; }
};

bool admitted(const MarkingWindow& w, const GaussDiagram& d) { return w.admits(d); }
bool admitted(const MarkingWindow& w, const ArrowDiagram& d) { return w.admits(d); }
bool admitted(const MarkingWindow& w, const BasedArrow& d) { return w.admits(d.framed()); }
bool admitted(const MarkingWindow& w, const DegenerateArrow& d) { return w.admits(d.framed()); }

template <class Key>
class Collector {
 public:
  Collector(const MarkingWindow& w, WindowPolicy p) : window_(w), policy_(p) {}

  void offer(const LinComb<Key>& v) {
    if (v.is_zero()) return;
    LinComb<Key> kept = v.filtered([&](const Key& k) { return admitted(window_, k); });
    if (kept.size() != v.size()) {
      if (policy_ == WindowPolicy::Closed) {
        skipped_.insert(v.normalized());
        return;
      }
      truncated_.insert(v.normalized());
    }
    if (!kept.is_zero()) found_.insert(kept.normalized());
  }

  GenerationReport report(Family f) const {
    GenerationReport r;
    for (const auto& v : found_) r.instances.push_back(RelationInstance{f, v});
    r.skipped = skipped_.size();
    r.truncated = truncated_.size();
    return r;
  }

 private:
  const MarkingWindow& window_;
  WindowPolicy policy_;
  std::set<LinComb<Key>, CombLess<Key>> found_;
  std::set<LinComb<Key>, CombLess<Key>> skipped_;
  std::set<LinComb<Key>, CombLess<Key>> truncated_;
};

GaussDiagram flip_sign(const GaussDiagram& g, int i) {
  std::vector<Arrow> arrows(g.arrows().begin(), g.arrows().end());
  arrows[static_cast<std::size_t>(i)].sign = -arrows[static_cast<std::size_t>(i)].sign;
  return GaussDiagram(g.K(), std::move(arrows), TrustedTag{});
}

GaussDiagram without(const GaussDiagram& g, int i) {
  std::vector<int> keep;
  for (int j = 0; j < g.degree(); ++j) {
    if (j != i) keep.push_back(j);
  }
  return g.induced(keep);
}

// Gauss frames of the triangles a two-arrow degeneration belongs to, with
// both signs for the arrow it lacks.
std::vector<TriangleFrame<Species::gauss>> gauss_frames(const DegenerateFrame<Species::gauss>& df) {
  auto plus = df.frame;
  auto minus = df.frame;
  plus.signs[static_cast<std::size_t>(df.absent)] = 1;
  minus.signs[static_cast<std::size_t>(df.absent)] = -1;
  return {plus, minus};
}

}  // namespace

const char* family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.name;
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (const auto& info : kFamilies) {
    if (name == info.name) return info.family;
  }
  throw std::invalid_argument("unknown relation family '" + name + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& info : kFamilies) out.push_back(info.family);
  return out;
}

bool is_gauss_family(Family f) {
  switch (f) {
    case Family::P1:
    case Family::P2full:
    case Family::P3full:
    case Family::P2h1:
    case Family::P2h2:
    case Family::G6T:
    case Family::G2T:
      return true;
    default:
      return false;
  }
}

std::vector<ArrowComb> arrow_instances_containing(Family family, const ArrowDiagram& x) {
  std::vector<ArrowComb> out;
  switch (family) {
    case Family::AP1:
      if (!find_kinks(x).empty()) out.emplace_back(x);
      break;
    case Family::AP2:
      if (!find_bigons(x).empty()) out.emplace_back(x);
      break;
    case Family::A6T:
      for (const auto& n : nice_degenerations(x)) {
        for (const auto& df : frames_of_degenerate(n)) {
          out.push_back(apply_template(six_term_arrow(), df.frame, Orders{1, 1, 1}));
        }
      }
      break;
    case Family::A2T:
      for (const auto& t : find_triangles(x)) out.push_back(apply_template(two_term(), t.frame, t.orders));
      break;
    default:
      throw std::invalid_argument(std::string("not an arrow family: ") + family_name(family));
  }
  return out;
}

std::vector<GaussComb> gauss_instances_containing(Family family, const GaussDiagram& x) {
  std::vector<GaussComb> out;
  switch (family) {
    case Family::P1:
      if (!find_kinks(x).empty()) out.emplace_back(x);
      break;
    case Family::P2h2:
      if (!find_bigons(x).empty()) out.emplace_back(x);
      break;
    case Family::P2full:
      for (auto [a, b] : find_bigons(x)) {
        GaussComb v(x);
        v.add(without(x, a), Rational(1));
        v.add(without(x, b), Rational(1));
        out.push_back(std::move(v));
      }
      break;
    case Family::P2h1:
      for (int i = 0; i < x.degree(); ++i) {
        GaussComb v(x);
        v.add(flip_sign(x, i), Rational(1));
        out.push_back(std::move(v));
      }
      break;
    case Family::G6T:
      for (const auto& n : nice_degenerations(x)) {
        for (const auto& df : frames_of_degenerate(n)) {
          for (const auto& f : gauss_frames(df)) out.push_back(apply_template(six_term_gauss(), f, Orders{1, 1, 1}));
        }
      }
      break;
    case Family::G2T:
    case Family::P3full:
      for (const auto& t : find_triangles(x)) {
        if (!triangle_signs_valid(t.frame.signs, t.orders)) continue;
        out.push_back(apply_template(family == Family::G2T ? two_term() : eight_term(), t.frame, t.orders));
      }
      break;
    default:
      throw std::invalid_argument(std::string("not a Gauss family: ") + family_name(family));
  }
  return out;
}

GenerationReport gen_family(Family family, int n, const MarkingWindow& window, WindowPolicy policy) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (family == Family::Triangle || family == Family::Based6T) {
    if (family == Family::Triangle) {
      Collector<DegenerateArrow> c(window, policy);
      for (const auto& x : enumerate_diagrams<Species::arrow>(n, window)) {
        for (const auto& d : nice_degenerations(x)) {
          if (!d.is_monotonic()) c.offer(triangle_relation(d));
        }
      }
      return c.report(family);
    }
    Collector<BasedArrow> c(window, policy);
    for (const auto& x : enumerate_diagrams<Species::arrow>(n, window)) {
      for (const auto& d : nice_degenerations(x)) {
        for (const auto& df : frames_of_degenerate(d)) c.offer(based_six_term(df.frame));
      }
    }
    return c.report(family);
  }
  if (is_gauss_family(family)) {
    Collector<GaussDiagram> c(window, policy);
    for (const auto& x : enumerate_diagrams<Species::gauss>(n, window)) {
      for (const auto& v : gauss_instances_containing(family, x)) c.offer(v);
    }
    if (family == Family::P3full && policy == WindowPolicy::Restricted && n >= 1) {
      // Instances whose full triangle leaves the window but whose pair terms do not.
      for (const auto& x : enumerate_diagrams<Species::gauss>(n - 1, window)) {
        for (const auto& d : nice_degenerations(x)) {
          for (const auto& df : frames_of_degenerate(d)) {
            for (const auto& f : gauss_frames(df)) c.offer(apply_template(eight_term(), f, orders_for_signs(f.signs)));
          }
        }
      }
    }
    return c.report(family);
  }
  Collector<ArrowDiagram> c(window, policy);
  for (const auto& x : enumerate_diagrams<Species::arrow>(n, window)) {
    for (const auto& v : arrow_instances_containing(family, x)) c.offer(v);
  }
  return c.report(family);
}

std::vector<RelationInstance> gen_all_constraints(int n, const MarkingWindow& window, WindowPolicy policy) {
  std::vector<RelationInstance> out;
  for (Family f : {Family::AP1, Family::AP2, Family::A6T}) {
    auto r = gen_family(f, n, window, policy);
    out.insert(out.end(), std::make_move_iterator(r.instances.begin()), std::make_move_iterator(r.instances.end()));
  }
  return out;
}

ArrowComb adjoint_S(const GaussComb& r) {
  ArrowComb out;
  for (const auto& [g, c] : r) {
    int sign = 1;
    for (const Arrow& a : g.arrows()) sign *= a.sign;
    out.add(forget_signs(g), c * sign);
  }
  return out;
}

SpanCompatReport check_I_span_compat(int n, const MarkingWindow& window) {
  SpanCompatReport report;
  DiagramIndexedMatrix<GaussDiagram> m;
  Echelon span;
  for (int k = 1; k <= n; ++k) {
    for (Family f : {Family::P1, Family::P2full, Family::P3full}) {
      for (const auto& inst : gen_family(f, k, window, WindowPolicy::Closed).instances) {
        span.insert(m.coordinates(std::get<GaussComb>(inst.vector), true));
        ++report.p_instances;
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (const auto& g : enumerate_diagrams<Species::gauss>(k, window)) {
      std::vector<Move> moves = removal_sites(g, MoveKind::R1Remove);
      for (const Move& mv : removal_sites(g, MoveKind::R2Remove)) moves.push_back(mv);
      for (const Move& mv : r3_sites(g)) moves.push_back(mv);
      for (const Move& mv : moves) {
        GaussComb r(g);
        r.add(apply_R_move(g, mv), Rational(-1));
        if (r.is_zero()) continue;
        ++report.r_instances;
        const GaussComb image = subdiagram_expand_I(r);
        if (!span.contains(m.coordinates(image, true))) {
          if (report.failures++ == 0) report.witness = describe(g) + " under " + describe(mv);
        }
      }
    }
  }
  return report;
}

}  // namespace arrowknot
