#include "arrowknot/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace arrowknot {

namespace {

template <Species S>
void validate(Marking, const std::vector<Arrow>& arrows) {
  const int size = 2 * static_cast<int>(arrows.size());
  std::vector<int> seen(static_cast<std::size_t>(size), 0);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    for (int p : {a.tail, a.head}) {
      if (p < 0 || p >= size) {
        throw ValidationError("endpoint index " + std::to_string(p) + " out of range 0.." +
                              std::to_string(size - 1) + " (arrow " + std::to_string(i) + ")");
      }
      if (seen[static_cast<std::size_t>(p)]++ != 0) {
        throw ValidationError("duplicate endpoint index " + std::to_string(p));
      }
    }
    if (a.tail == a.head) {
      throw ValidationError("arrow " + std::to_string(i) + " has tail == head");
    }
    if constexpr (S == Species::gauss) {
      if (a.sign != 1 && a.sign != -1) {
        throw ValidationError("arrow " + std::to_string(i) + " of a Gauss diagram needs sign +1 or -1");
      }
    } else {
      if (a.sign != 0) {
        throw ValidationError("arrow " + std::to_string(i) + " of an arrow diagram carries a sign");
      }
    }
  }
  for (int p = 0; p < size; ++p) {
    if (seen[static_cast<std::size_t>(p)] == 0) {
      throw ValidationError("missing endpoint index " + std::to_string(p));
    }
  }
}

struct Token {
  int index;
  int role;
  Marking mark;
  int sign;
  friend auto operator<=>(const Token&, const Token&) = default;
};

// Token stream of the diagram read starting at position r.
template <Species S>
void rotation_stream(const Diagram<S>& d, const std::vector<Endpoint>& ends, int r,
                     std::vector<int>& relabel, std::vector<Token>& out) {
  const int size = d.endpoint_count();
  std::fill(relabel.begin(), relabel.end(), -1);
  int next = 0;
  out.clear();
  for (int k = 0; k < size; ++k) {
    const Endpoint& e = ends[static_cast<std::size_t>((k + r) % size)];
    int& id = relabel[static_cast<std::size_t>(e.arrow)];
    if (id < 0) id = next++;
    const Arrow& a = d.arrow(e.arrow);
    out.push_back(Token{id, e.head ? 1 : 0, a.mark, a.sign});
  }
}

}  // namespace

template <Species S>
Diagram<S>::Diagram(Marking K, std::vector<Arrow> arrows) : K_(K), arrows_(std::move(arrows)) {
  validate<S>(K_, arrows_);
  canonical_ = arrows_.empty();
}

template <Species S>
std::vector<Endpoint> Diagram<S>::endpoints() const {
  std::vector<Endpoint> ends(static_cast<std::size_t>(endpoint_count()));
  for (int i = 0; i < degree(); ++i) {
    ends[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(i)].tail)] = Endpoint{i, false};
    ends[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(i)].head)] = Endpoint{i, true};
  }
  return ends;
}

template <Species S>
Diagram<S> Diagram<S>::rotated(int r) const {
  const int size = endpoint_count();
  if (size == 0) return *this;
  r = ((r % size) + size) % size;
  std::vector<Arrow> out = arrows_;
  for (Arrow& a : out) {
    a.tail = (a.tail - r + size) % size;
    a.head = (a.head - r + size) % size;
  }
  return Diagram(K_, std::move(out), TrustedTag{});
}

template <Species S>
Diagram<S> Diagram<S>::induced(std::span<const int> arrow_ids) const {
  const int size = endpoint_count();
  std::vector<int> keep(static_cast<std::size_t>(size), -1);
  for (int id : arrow_ids) {
    const Arrow& a = arrow(id);
    keep[static_cast<std::size_t>(a.tail)] = 0;
    keep[static_cast<std::size_t>(a.head)] = 0;
  }
  int next = 0;
  for (int p = 0; p < size; ++p) {
    if (keep[static_cast<std::size_t>(p)] == 0) keep[static_cast<std::size_t>(p)] = next++;
  }
  std::vector<Arrow> out;
  out.reserve(arrow_ids.size());
  for (int id : arrow_ids) {
    Arrow a = arrow(id);
    a.tail = keep[static_cast<std::size_t>(a.tail)];
    a.head = keep[static_cast<std::size_t>(a.head)];
    out.push_back(a);
  }
  return Diagram(K_, std::move(out), TrustedTag{}, arrow_ids.empty());
}

template <Species S>
std::strong_ordering Diagram<S>::compare_encoding(const Diagram& other) const {
  if (auto c = K_ <=> other.K_; c != 0) return c;
  return std::lexicographical_compare_three_way(arrows_.begin(), arrows_.end(),
                                                other.arrows_.begin(), other.arrows_.end());
}

template <Species S>
bool Diagram<S>::equivalent(const Diagram& other) const {
  if (K_ != other.K_ || degree() != other.degree()) return false;
  if (canonical_ && other.canonical_) return arrows_ == other.arrows_;
  return canonicalize(*this).arrows_ == canonicalize(other).arrows_;
}

template <Species S>
CanonicalForm<S> canonical_form(const Diagram<S>& d) {
  const int size = d.endpoint_count();
  if (size == 0) return {Diagram<S>(d.K()), 1};
  const auto ends = d.endpoints();
  std::vector<int> relabel(static_cast<std::size_t>(d.degree()));
  std::vector<Token> best;
  std::vector<Token> cur;
  int aut = 0;
  for (int r = 0; r < size; ++r) {
    rotation_stream(d, ends, r, relabel, cur);
    if (r == 0) {
      best = cur;
      aut = 1;
      continue;
    }
    const auto c = std::lexicographical_compare_three_way(cur.begin(), cur.end(), best.begin(), best.end());
    if (c < 0) {
      best.swap(cur);
      aut = 1;
    } else if (c == 0) {
      ++aut;
    }
  }
  std::vector<Arrow> arrows(static_cast<std::size_t>(d.degree()));
  for (int k = 0; k < size; ++k) {
    const Token& t = best[static_cast<std::size_t>(k)];
    Arrow& a = arrows[static_cast<std::size_t>(t.index)];
    if (t.role == 0) {
      a.tail = k;
    } else {
      a.head = k;
    }
    a.mark = t.mark;
    a.sign = t.sign;
  }
  return {Diagram<S>(d.K(), std::move(arrows), TrustedTag{}, true), aut};
}

ArrowDiagram forget_signs(const GaussDiagram& g) {
  std::vector<Arrow> arrows(g.arrows().begin(), g.arrows().end());
  for (Arrow& a : arrows) a.sign = 0;
  return canonicalize(ArrowDiagram(g.K(), std::move(arrows), TrustedTag{}));
}

GaussDiagram with_signs(const ArrowDiagram& a, std::span<const int> signs) {
  if (signs.size() != static_cast<std::size_t>(a.degree())) {
    throw std::invalid_argument("with_signs: need one sign per arrow");
  }
  std::vector<Arrow> arrows(a.arrows().begin(), a.arrows().end());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("with_signs: sign must be +1 or -1");
    arrows[i].sign = signs[i];
  }
  return GaussDiagram(a.K(), std::move(arrows), TrustedTag{});
}

bool crosses(const Arrow& x, const Arrow& y) noexcept {
  const int lo = std::min(x.tail, x.head);
  const int hi = std::max(x.tail, x.head);
  const bool y1 = lo < y.tail && y.tail < hi;
  const bool y2 = lo < y.head && y.head < hi;
  return y1 != y2;
}

template <Species S>
std::string describe(const Diagram<S>& d) {
  std::ostringstream os;
  os << (S == Species::gauss ? "gauss" : "arrow") << "[K=" << d.K();
  for (const Arrow& a : d.arrows()) {
    os << " (" << a.tail << "->" << a.head;
    if constexpr (S == Species::gauss) os << (a.sign > 0 ? " +" : " -");
    os << " m=" << a.mark << ")";
  }
  os << "]";
  return os.str();
}

template class Diagram<Species::gauss>;
template class Diagram<Species::arrow>;
template CanonicalForm<Species::gauss> canonical_form(const Diagram<Species::gauss>&);
template CanonicalForm<Species::arrow> canonical_form(const Diagram<Species::arrow>&);
template std::string describe(const Diagram<Species::gauss>&);
template std::string describe(const Diagram<Species::arrow>&);

}  // namespace arrowknot
