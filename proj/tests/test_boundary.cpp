#include <gtest/gtest.h>

#include <random>

#include "arrowknot/boundary.hpp"
#include "arrowknot/chain.hpp"
#include "arrowknot/enumerate.hpp"
#include "arrowknot/maps.hpp"

using namespace arrowknot;

namespace {

ArrowDiagram arrows(Marking K, std::vector<Arrow> a) { return ArrowDiagram(K, std::move(a)); }

std::vector<DegenerateArrow> degenerations(const std::vector<ArrowDiagram>& ds, bool monotonic) {
  std::vector<DegenerateArrow> out;
  for (const auto& d : ds) {
    for (const auto& g : nice_degenerations(d)) {
      if (is_monotonic(g) == monotonic) out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST(Boundary, LocalSignsAtTheBase) {
  const ArrowDiagram crossing = arrows(2, {{0, 2, 0, 1}, {1, 3, 0, 1}});
  const BasedArrow tails(crossing, 0);
  EXPECT_TRUE(is_nice(tails));
  EXPECT_EQ(eta(tails), 1);
  EXPECT_EQ(head_count(tails), 0);
  EXPECT_EQ(epsilon(tails), 1);

  const ArrowDiagram parallel = arrows(2, {{0, 1, 0, 1}, {2, 3, 0, 1}});
  const BasedArrow head_tail(parallel, 1);
  EXPECT_TRUE(is_nice(head_tail));
  EXPECT_EQ(eta(head_tail), -1);
  EXPECT_EQ(head_count(head_tail), 1);
  EXPECT_EQ(epsilon(head_tail), 1);

  const BasedArrow own(parallel, 0);
  EXPECT_FALSE(is_nice(own));
  EXPECT_TRUE(d_based(own).is_zero());
}

TEST(Boundary, SingleArrowHasNoBoundary) {
  for (Marking m = -2; m <= 3; ++m) {
    EXPECT_TRUE(boundary_d(arrows(3, {{0, 1, 0, m}})).is_zero());
    EXPECT_TRUE(boundary_d(arrows(3, {{1, 0, 0, m}})).is_zero());
  }
  EXPECT_TRUE(boundary_d(ArrowDiagram(3)).is_zero());
}

TEST(Boundary, BaseExpansionPairsLikeTheDiagram) {
  const MarkingWindow w(2, {0, 1, 2});
  for (const auto& a : enumerate_diagrams<Species::arrow>(2, w)) {
    const BasedComb ba = base_expand(a);
    Rational total = 0;
    for (const auto& [b, c] : ba) total += c;
    EXPECT_EQ(total, Rational(a.endpoint_count()));
    for (const auto& [b, c] : ba) {
      EXPECT_EQ(pair_ortho(ba, BasedComb(b)), pair_norm(ArrowComb(a), ArrowComb(b.underlying())));
    }
  }
}

TEST(Boundary, TriangleRelationsNormalizeToZero) {
  const MarkingWindow w(2, {0, 1, 2});
  const auto ds = enumerate_diagrams<Species::arrow>(2, w);
  const auto non = degenerations(ds, false);
  ASSERT_FALSE(non.empty());
  for (const auto& n : non) {
    if (n.same_arrow()) continue;
    EXPECT_TRUE(normalize_triangle(triangle_relation(n)).is_zero()) << describe(n);
    const auto [d1, d2] = triangle_resolutions(n);
    EXPECT_TRUE(is_monotonic(d1));
    EXPECT_TRUE(is_monotonic(d2));
  }
}

TEST(Boundary, NormalizationIsIdempotent) {
  const MarkingWindow w(3, {0, 1, 2, 3});
  for (const auto& a : enumerate_diagrams<Species::arrow>(3, MarkingWindow(3, {0, 2}))) {
    const DegenerateComb x = normalize_triangle(d_based(base_expand(a)));
    EXPECT_EQ(normalize_triangle(x), x);
    for (const auto& [k, c] : x) EXPECT_TRUE(is_monotonic(k));
  }
}

TEST(Boundary, NarrowWindowRaises) {
  const auto non = degenerations(enumerate_diagrams<Species::arrow>(2, MarkingWindow(3, {0, 1})), false);
  const MarkingWindow narrow(3, {0, 1});
  int raised = 0;
  for (const auto& n : non) {
    try {
      normalize_triangle(DegenerateComb(n), narrow);
    } catch (const WindowError& e) {
      EXPECT_NE(std::string(e.what()).find("degenerate"), std::string::npos);
      ++raised;
    }
  }
  EXPECT_GT(raised, 0);
}

TEST(Boundary, DualityWithBasedSixTerm) {
  const MarkingWindow w(2, {0, 1, 2});
  for (int n = 2; n <= 3; ++n) {
    const auto ds = enumerate_diagrams<Species::arrow>(n, w);
    const auto mono = degenerations(ds, true);
    std::mt19937_64 rng(static_cast<unsigned>(n));
    for (int t = 0; t < 300; ++t) {
      const auto& d = mono[rng() % mono.size()];
      const auto& a = ds[rng() % ds.size()];
      const BasedArrow b(a, static_cast<int>(rng() % static_cast<unsigned>(a.endpoint_count())));
      const auto [lhs, rhs] = based_6T_pairing_sides(b, d);
      EXPECT_EQ(lhs, rhs) << describe(b) << " vs " << describe(d);
    }
    for (std::size_t i = 0; i < mono.size() && i < 40; ++i) {
      for (const auto& [b, c] : based_six_term(mono[i])) EXPECT_TRUE(based_6T_pairing_check(b, mono[i]));
    }
  }
}

TEST(Boundary, DegreeTwoChainFormulaIsClosed) {
  for (const auto& gamma : std::vector<std::vector<Marking>>{{1, 1, -2}, {1, 2, 3}, {-1, 4, 2}}) {
    const Formula f = gv_formula(2, gamma);
    EXPECT_FALSE(f.is_zero());
    EXPECT_TRUE(boundary_d(f.vector).is_zero());
  }
}
