#include "arrowknot/chain.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "arrowknot/enumerate.hpp"

namespace arrowknot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> partner_table(const ArrowDiagram& d) {
  std::vector<int> partner(static_cast<std::size_t>(d.endpoint_count()));
  for (const Arrow& a : d.arrows()) {
    partner[static_cast<std::size_t>(a.tail)] = a.head;
    partner[static_cast<std::size_t>(a.head)] = a.tail;
  }
  return partner;
}

// Region index (0-based, in order of first appearance) of every arc.
std::vector<int> arc_regions(const ArrowDiagram& d) {
  const int size = d.endpoint_count();
  if (size == 0) return {};
  const auto partner = partner_table(d);
  UnionFind uf(size);
  // Walking along a region's boundary, arc k continues past a chord into the
  // arc starting at the chord's other end.
  for (int k = 0; k < size; ++k) uf.unite(k, partner[static_cast<std::size_t>(next_pos(k, size))]);
  std::vector<int> id(static_cast<std::size_t>(size), -1);
  std::vector<int> out(static_cast<std::size_t>(size));
  int next = 0;
  for (int k = 0; k < size; ++k) {
    int& r = id[static_cast<std::size_t>(uf.find(k))];
    if (r < 0) r = next++;
    out[static_cast<std::size_t>(k)] = r;
  }
  return out;
}

bool planar(const ArrowDiagram& d) {
  for (int i = 0; i < d.degree(); ++i) {
    for (int j = i + 1; j < d.degree(); ++j) {
      if (crosses(d.arrow(i), d.arrow(j))) return false;
    }
  }
  return true;
}

// Rotation-minimal encoding of (shape, arc labels).
ChainPresentation least_rotation(const ArrowDiagram& d, const std::vector<int>& labels) {
  const int size = d.endpoint_count();
  const auto ends = d.endpoints();
  std::vector<int> best;
  int best_r = 0;
  std::vector<int> cur;
  std::vector<int> relabel(static_cast<std::size_t>(d.degree()));
  for (int r = 0; r < size; ++r) {
    std::fill(relabel.begin(), relabel.end(), -1);
    cur.clear();
    int next = 0;
    for (int k = 0; k < size; ++k) {
      const int p = (k + r) % size;
      const Endpoint& e = ends[static_cast<std::size_t>(p)];
      int& id = relabel[static_cast<std::size_t>(e.arrow)];
      if (id < 0) id = next++;
      cur.insert(cur.end(), {id, e.head ? 1 : 0, labels[static_cast<std::size_t>(p)]});
    }
    if (r == 0 || cur < best) {
      best = cur;
      best_r = r;
    }
  }
  ChainPresentation out;
  out.shape = reframe(d, best_r);
  out.arc_region.resize(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) out.arc_region[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>((k + best_r) % size)];
  return out;
}

}  // namespace

std::pair<int, int> sides(const ChainPresentation& cp, int arrow) {
  const Arrow& a = cp.shape.arrow(arrow);
  // Arc h starts the left side, arc t starts the right side.
  return {cp.arc_region[static_cast<std::size_t>(a.head)], cp.arc_region[static_cast<std::size_t>(a.tail)]};
}

bool is_valid_presentation(const ChainPresentation& cp) {
  const int n = cp.degree();
  if (static_cast<int>(cp.arc_region.size()) != cp.shape.endpoint_count() || !planar(cp.shape)) return false;
  const auto regions = arc_regions(cp.shape);
  std::vector<int> label_of(static_cast<std::size_t>(n + 1), 0);
  std::set<int> used;
  for (std::size_t k = 0; k < regions.size(); ++k) {
    int& l = label_of[static_cast<std::size_t>(regions[k])];
    if (l != 0 && l != cp.arc_region[k]) return false;
    l = cp.arc_region[k];
    used.insert(l);
  }
  if (n > 0 && (static_cast<int>(used.size()) != n + 1 || *used.begin() != 1 || *used.rbegin() != n + 1)) return false;
  for (int i = 0; i < n; ++i) {
    auto [left, right] = sides(cp, i);
    if (left >= right) return false;
  }
  return true;
}

std::vector<ChainPresentation> enumerate_Un(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n == 0) return {ChainPresentation{ArrowDiagram(0), {}}};
  std::vector<ChainPresentation> out;
  std::set<std::pair<std::vector<Arrow>, std::vector<int>>> seen;
  for (const ArrowDiagram& shape : enumerate_shapes(n, 0)) {
    if (!planar(shape)) continue;
    const auto regions = arc_regions(shape);
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> labels(regions.size());
      for (std::size_t k = 0; k < regions.size(); ++k) labels[k] = perm[static_cast<std::size_t>(regions[k])];
      ChainPresentation cp = least_rotation(shape, labels);
      if (!is_valid_presentation(cp)) continue;
      std::vector<Arrow> key(cp.shape.arrows().begin(), cp.shape.arrows().end());
      if (seen.emplace(std::move(key), cp.arc_region).second) out.push_back(std::move(cp));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

ArrowDiagram phi_gamma(const ChainPresentation& cp, const std::vector<Marking>& gamma) {
  const int n = cp.degree();
  if (static_cast<int>(gamma.size()) != n + 1) throw std::invalid_argument("need n+1 gamma values");
  const int size = cp.shape.endpoint_count();
  const Marking K = std::accumulate(gamma.begin(), gamma.end(), Marking{0});
  std::vector<Arrow> arrows(cp.shape.arrows().begin(), cp.shape.arrows().end());
  for (Arrow& a : arrows) {
    std::set<int> left;
    for (int k = a.head; k != a.tail; k = next_pos(k, size)) left.insert(cp.arc_region[static_cast<std::size_t>(k)]);
    a.mark = 0;
    for (int r : left) a.mark += gamma[static_cast<std::size_t>(r - 1)];
  }
  return canonicalize(ArrowDiagram(K, std::move(arrows)));
}

Formula gv_formula(int n, const std::vector<Marking>& gamma) {
  if (static_cast<int>(gamma.size()) != n + 1) {
    throw std::invalid_argument("gamma needs " + std::to_string(n + 1) + " entries for degree " + std::to_string(n));
  }
  for (Marking g : gamma) {
    if (g == 0) throw std::invalid_argument("gamma entries must be nonzero");
  }
  ArrowComb v;
  for (const ChainPresentation& cp : enumerate_Un(n)) v.add(phi_gamma(cp, gamma), Rational(1));
  return Formula{std::move(v), std::accumulate(gamma.begin(), gamma.end(), Marking{0}), Provenance::gv};
}

}  // namespace arrowknot
