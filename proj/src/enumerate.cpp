#include "arrowknot/enumerate.hpp"

#include <algorithm>
#include <set>

#include "arrowknot/lincomb.hpp"

namespace arrowknot {

namespace {

void matchings(std::vector<int>& partner, int size, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int p = 0; p < size; ++p) {
    if (partner[static_cast<std::size_t>(p)] < 0) {
      first = p;
      break;
    }
  }
  if (first < 0) {
    out.push_back(partner);
    return;
  }
  for (int q = first + 1; q < size; ++q) {
    if (partner[static_cast<std::size_t>(q)] >= 0) continue;
    partner[static_cast<std::size_t>(first)] = q;
    partner[static_cast<std::size_t>(q)] = first;
    matchings(partner, size, out);
    partner[static_cast<std::size_t>(first)] = -1;
    partner[static_cast<std::size_t>(q)] = -1;
  }
}

}  // namespace

std::vector<ArrowDiagram> enumerate_shapes(int n, Marking K) {
  std::set<ArrowDiagram, EncodingLess> shapes;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<std::vector<int>> all;
  matchings(partner, 2 * n, all);
  for (const auto& m : all) {
    std::vector<std::pair<int, int>> chords;
    for (int p = 0; p < 2 * n; ++p) {
      if (m[static_cast<std::size_t>(p)] > p) chords.emplace_back(p, m[static_cast<std::size_t>(p)]);
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Arrow> arrows;
      for (int i = 0; i < n; ++i) {
        auto [a, b] = chords[static_cast<std::size_t>(i)];
        if (mask & (1u << i)) std::swap(a, b);
        arrows.push_back(Arrow{a, b, 0, 0});
      }
      shapes.insert(canonicalize(ArrowDiagram(K, std::move(arrows), TrustedTag{})));
    }
  }
  return {shapes.begin(), shapes.end()};
}

template <Species S>
std::vector<Diagram<S>> enumerate_diagrams(int n, const MarkingWindow& window) {
  if (n == 0) return {Diagram<S>(window.K())};
  const auto& marks = window.allowed();
  std::set<Diagram<S>, EncodingLess> found;
  if (marks.empty()) return {};
  const int signs = S == Species::gauss ? (1 << n) : 1;
  for (const ArrowDiagram& shape : enumerate_shapes(n, window.K())) {
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    while (true) {
      for (int smask = 0; smask < signs; ++smask) {
        std::vector<Arrow> arrows(shape.arrows().begin(), shape.arrows().end());
        for (int i = 0; i < n; ++i) {
          arrows[static_cast<std::size_t>(i)].mark = marks[digit[static_cast<std::size_t>(i)]];
          if constexpr (S == Species::gauss) arrows[static_cast<std::size_t>(i)].sign = (smask >> i) & 1 ? -1 : 1;
        }
        found.insert(canonicalize(Diagram<S>(window.K(), std::move(arrows), TrustedTag{})));
      }
      int i = 0;
      while (i < n && ++digit[static_cast<std::size_t>(i)] == marks.size()) digit[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
  return {found.begin(), found.end()};
}

template std::vector<GaussDiagram> enumerate_diagrams(int, const MarkingWindow&);
template std::vector<ArrowDiagram> enumerate_diagrams(int, const MarkingWindow&);

}  // namespace arrowknot
