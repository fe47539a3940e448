#include "arrowknot/templates.hpp"

#include <sstream>

namespace arrowknot {

namespace {

constexpr unsigned kPairM = (1u << TM) | (1u << MB);
constexpr unsigned kPairT = (1u << TM) | (1u << TB);
constexpr unsigned kPairB = (1u << TB) | (1u << MB);
constexpr unsigned kAll = 7u;

}  // namespace

const TriangleTemplate& six_term_arrow() {
  static const TriangleTemplate t{"A6T",
                                  {
                                      {kPairM, SegM, +1, +1, -1},
                                      {kPairM, SegM, -1, -1, -1},
                                      {kPairT, SegT, +1, +1, -1},
                                      {kPairT, SegT, -1, -1, -1},
                                      {kPairB, SegB, +1, +1, -1},
                                      {kPairB, SegB, -1, -1, -1},
                                  }};
  return t;
}

const TriangleTemplate& six_term_gauss() {
  static const TriangleTemplate t{"G6T",
                                  {
                                      {kPairM, SegM, +1, +1, TB},
                                      {kPairM, SegM, -1, -1, TB},
                                      {kPairT, SegT, +1, +1, MB},
                                      {kPairT, SegT, -1, -1, MB},
                                      {kPairB, SegB, +1, +1, TM},
                                      {kPairB, SegB, -1, -1, TM},
                                  }};
  return t;
}

const TriangleTemplate& eight_term() {
  static const TriangleTemplate t{"P3", {
                                            {kAll, -1, +1, +1, -1},
                                            {kAll, -1, -1, -1, -1},
                                            {kPairM, -1, +1, +1, -1},
                                            {kPairM, -1, -1, -1, -1},
                                            {kPairT, -1, +1, +1, -1},
                                            {kPairT, -1, -1, -1, -1},
                                            {kPairB, -1, +1, +1, -1},
                                            {kPairB, -1, -1, -1, -1},
                                        }};
  return t;
}

const TriangleTemplate& two_term() {
  static const TriangleTemplate t{"2T", {
                                            {kAll, -1, +1, +1, -1},
                                            {kAll, -1, -1, -1, -1},
                                        }};
  return t;
}

namespace {

Orders term_orders(const TemplateTerm& term, const Orders& reference) {
  if (term.segment >= 0) {
    Orders o{1, 1, 1};
    o[static_cast<std::size_t>(term.segment)] = term.order;
    return o;
  }
  return {reference[0] * term.order, reference[1] * term.order, reference[2] * term.order};
}

template <Species S>
int term_coefficient(const TemplateTerm& term, const TriangleFrame<S>& f) {
  int c = term.coef;
  if (term.sign_of >= 0) c *= f.signs[static_cast<std::size_t>(term.sign_of)];
  return c;
}

}  // namespace

template <Species S>
LinComb<Diagram<S>> apply_template(const TriangleTemplate& t, const TriangleFrame<S>& f, const Orders& reference) {
  LinComb<Diagram<S>> out;
  for (const TemplateTerm& term : t.terms) {
    const int c = term_coefficient(term, f);
    if (c == 0) continue;
    out.add(realize(f, term.mask, term_orders(term, reference)).diagram, Rational(c));
  }
  return out;
}

BasedComb based_six_term(const TriangleFrame<Species::arrow>& f) {
  const int s = f.cyclic_tmb() ? 1 : -1;
  BasedComb out;
  for (const TemplateTerm& term : six_term_arrow().terms) {
    const auto r = realize(f, term.mask, term_orders(term, Orders{1, 1, 1}));
    out.add(BasedArrow(r.diagram, r.slot_first[static_cast<std::size_t>(term.segment)]), Rational(s * term.coef));
  }
  return out;
}

std::string template_table_text() {
  std::ostringstream os;
  os << "conventions: arrow=over->under; mark=arc head->tail; segments T={TM.t,TB.t} M={TM.h,MB.t} "
        "B={TB.h,MB.h}; mTB=mTM+mMB-[TMB cyclic]K; R3 signs eTM*eTB=oM*oB eTM*eMB=oT*oB\n";
  os << "R1/P1/AP1: isolated arrow, mark K if tail,head adjacent, 0 if head,tail adjacent\n";
  os << "R2/AP2/P2: adjacent tails, adjacent heads, equal marks, opposite signs; P2=H+ab + H+a + H+b\n";
  os << "triangle: tail-tail or head-head N = D1 + D2; same-arrow -> 0; based6T factor [TMB cyclic]?+1:-1\n";
  for (const TriangleTemplate* t : {&six_term_arrow(), &six_term_gauss(), &eight_term(), &two_term()}) {
    os << t->family << ':';
    for (const TemplateTerm& term : t->terms) {
      os << " (" << term.mask << ',' << term.segment << ',' << term.order << ',' << term.coef << ',' << term.sign_of
         << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::uint64_t template_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : template_table_text()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

template LinComb<Diagram<Species::gauss>> apply_template(const TriangleTemplate&, const TriangleFrame<Species::gauss>&,
                                                         const Orders&);
template LinComb<Diagram<Species::arrow>> apply_template(const TriangleTemplate&, const TriangleFrame<Species::arrow>&,
                                                         const Orders&);

}  // namespace arrowknot
