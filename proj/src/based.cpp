#include "arrowknot/based.hpp"

#include <sstream>

namespace arrowknot {

template <Species S>
Diagram<S> reframe(const Diagram<S>& d, int start) {
  const int size = d.endpoint_count();
  if (size == 0) return d;
  const auto ends = d.endpoints();
  std::vector<int> relabel(static_cast<std::size_t>(d.degree()), -1);
  std::vector<Arrow> arrows(static_cast<std::size_t>(d.degree()));
  int next = 0;
  for (int k = 0; k < size; ++k) {
    const Endpoint& e = ends[static_cast<std::size_t>(((k + start) % size + size) % size)];
    int& id = relabel[static_cast<std::size_t>(e.arrow)];
    if (id < 0) {
      id = next++;
      const Arrow& src = d.arrow(e.arrow);
      arrows[static_cast<std::size_t>(id)].sign = src.sign;
      arrows[static_cast<std::size_t>(id)].mark = src.mark;
    }
    Arrow& a = arrows[static_cast<std::size_t>(id)];
    (e.head ? a.head : a.tail) = k;
  }
  return Diagram<S>(d.K(), std::move(arrows), TrustedTag{});
}

template <Species S>
Based<S>::Based(const Diagram<S>& d, int base_arc) {
  const int size = d.endpoint_count();
  if (size == 0) throw ValidationError("the empty diagram has no arc to base");
  if (base_arc < 0 || base_arc >= size) {
    throw ValidationError("base arc " + std::to_string(base_arc) + " out of range");
  }
  framed_ = reframe(d, base_arc + 1);
}

template <Species S>
Endpoint Based<S>::before_base() const {
  return framed_.endpoints().back();
}

template <Species S>
Endpoint Based<S>::after_base() const {
  return framed_.endpoints().front();
}

template <Species S>
Degenerate<S>::Degenerate(const Diagram<S>& d, int first) {
  const int size = d.endpoint_count();
  if (size == 0) throw ValidationError("the empty diagram has no arc to shrink");
  if (first < 0 || first >= size) {
    throw ValidationError("fused position " + std::to_string(first) + " out of range");
  }
  framed_ = reframe(d, first + 1);
}

template <Species S>
Endpoint Degenerate<S>::first() const {
  return framed_.endpoints().back();
}

template <Species S>
Endpoint Degenerate<S>::second() const {
  return framed_.endpoints().front();
}

template <Species S>
bool Degenerate<S>::is_monotonic() const {
  const Endpoint a = first();
  const Endpoint b = second();
  return a.arrow != b.arrow && a.head != b.head;
}

template <Species S>
Degenerate<S> Degenerate<S>::swapped() const {
  const int last = framed_.endpoint_count() - 1;
  std::vector<Arrow> arrows(framed_.arrows().begin(), framed_.arrows().end());
  auto relocate = [&](int& p) {
    if (p == last) {
      p = 0;
    } else if (p == 0) {
      p = last;
    }
  };
  for (Arrow& a : arrows) {
    relocate(a.tail);
    relocate(a.head);
  }
  return Degenerate(reframe(Diagram<S>(framed_.K(), std::move(arrows), TrustedTag{}), 0));
}

template <Species S>
Degenerate<S> based_to_degenerate(const Based<S>& b) {
  return Degenerate<S>(b.framed());
}

template <Species S>
Based<S> degenerate_to_based(const Degenerate<S>& d) {
  return Based<S>(d.framed(), d.framed().endpoint_count() - 1);
}

template <Species S>
std::string describe(const Based<S>& b) {
  return "based(" + describe(b.framed()) + ", base between " +
         std::to_string(b.framed().endpoint_count() - 1) + " and 0)";
}

template <Species S>
std::string describe(const Degenerate<S>& d) {
  return "degenerate(" + describe(d.framed()) + ", fused " +
         std::to_string(d.framed().endpoint_count() - 1) + ",0)";
}

#define ARROWKNOT_INSTANTIATE(S)                                          \
  template Diagram<S> reframe(const Diagram<S>&, int);                   \
  template class Based<S>;                                               \
  template class Degenerate<S>;                                          \
  template Degenerate<S> based_to_degenerate(const Based<S>&);           \
  template Based<S> degenerate_to_based(const Degenerate<S>&);           \
  template std::string describe(const Based<S>&);                        \
  template std::string describe(const Degenerate<S>&);

ARROWKNOT_INSTANTIATE(Species::gauss)
ARROWKNOT_INSTANTIATE(Species::arrow)

#undef ARROWKNOT_INSTANTIATE

}  // namespace arrowknot
