#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <random>

#include "arrowknot/boundary.hpp"
#include "arrowknot/catalog.hpp"
#include "arrowknot/chain.hpp"
#include "arrowknot/checker.hpp"
#include "arrowknot/evaluate.hpp"
#include "arrowknot/maps.hpp"
#include "arrowknot/solver.hpp"
#include "arrowknot/walk.hpp"

using namespace arrowknot;

namespace {

Rational coefficient_sum(const Formula& f) {
  Rational s = 0;
  for (const auto& [d, c] : f.vector) s += c;
  return s;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("arrowknot_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Chain, PresentationCounts) {
  EXPECT_EQ(enumerate_Un(1).size(), 1u);
  EXPECT_EQ(enumerate_Un(2).size(), 3u);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& cp : enumerate_Un(n)) {
      EXPECT_TRUE(is_valid_presentation(cp));
      for (int i = 0; i < cp.degree(); ++i) {
        const auto [l, r] = sides(cp, i);
        EXPECT_LT(l, r);
      }
    }
  }
}

TEST(Chain, SingleArrowGetsLeftWeight) {
  const auto u1 = enumerate_Un(1);
  ASSERT_EQ(u1.size(), 1u);
  const ArrowDiagram a = phi_gamma(u1[0], {2, 5});
  EXPECT_EQ(a.K(), 7);
  ASSERT_EQ(a.degree(), 1);
  const Marking m = a.arrow(0).mark;
  EXPECT_TRUE(m == 2 || m == 5);
}

TEST(Chain, RejectsBadGamma) {
  EXPECT_THROW(gv_formula(2, {1, 2}), std::invalid_argument);
  EXPECT_THROW(gv_formula(2, {1, 0, 2}), std::invalid_argument);
}

TEST(Chain, EqualGammaMergesTerms) {
  for (int n = 1; n <= 3; ++n) {
    const Formula f = gv_formula(n, std::vector<Marking>(static_cast<std::size_t>(n + 1), 1));
    EXPECT_EQ(coefficient_sum(f), Rational(static_cast<long>(enumerate_Un(n).size())));
    EXPECT_EQ(f.provenance, Provenance::gv);
  }
}

TEST(Chain, ReversedGammaReversesArrows) {
  const std::vector<Marking> g{1, -2, 4, 3};
  const std::vector<Marking> r(g.rbegin(), g.rend());
  const Formula f = gv_formula(3, g);
  ArrowComb rev;
  for (const auto& [d, c] : f.vector) rev.add(reverse_arrows(d), c);
  EXPECT_EQ(gv_formula(3, r).vector, rev);
}

TEST(Solver, DegreeOneSpace) {
  const MarkingWindow w(3, {0, 1, 2, 3});
  const auto basis = solve_formula_space(1, w);
  EXPECT_EQ(basis.size(), 2u);
  for (const auto& f : basis) {
    for (const auto& [d, c] : f.vector) {
      EXPECT_NE(d.arrow(0).mark, 0);
      EXPECT_NE(d.arrow(0).mark, 3);
    }
  }
  EXPECT_TRUE(solve_formula_space(1, MarkingWindow(3, {0, 3})).empty());
}

TEST(Solver, BasisElementsPassTheChecker) {
  const MarkingWindow w(2, {0, 1, 2});
  const auto basis = solve_formula_space(2, w);
  ASSERT_FALSE(basis.empty());
  for (const auto& f : basis) {
    const CheckReport r = check_formula(f);
    EXPECT_TRUE(r.pass()) << r.summary();
  }
  EXPECT_TRUE(same_span(basis, solve_d_kernel(2, w)));
}

TEST(Solver, ChainFormulaLiesInTheSolvedSpace) {
  const auto basis = solve_formula_space(2, MarkingWindow(3, {0, 1, 2, 3}));
  EXPECT_TRUE(in_formula_span(gv_formula(2, {1, 1, 1}), basis));
}

TEST(Solver, GuardsAgainstHugeSystems) {
  SolveOptions o;
  o.max_columns = 10;
  EXPECT_THROW(solve_formula_space(3, MarkingWindow(3, {0, 1, 2, 3}), o), SolverTooLarge);
  EXPECT_GT(estimate_columns(3, MarkingWindow(3, {0, 1, 2, 3})), 10.0);
}

TEST(Solver, CacheRoundTrip) {
  const auto dir = scratch_dir("cache");
  SolveOptions o;
  o.cache_dir = dir.string();
  const MarkingWindow w(2, {0, 1, 2});
  const auto first = solve_formula_space(2, w, o);
  const auto path = solve_cache_path(dir.string(), 2, w, WindowPolicy::Restricted);
  EXPECT_TRUE(std::filesystem::exists(path));
  const auto second = solve_formula_space(2, w, o);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(first[i].vector, second[i].vector);
  EXPECT_NE(solve_cache_hash(2, w, WindowPolicy::Restricted), solve_cache_hash(2, w, WindowPolicy::Closed));
  std::filesystem::remove_all(dir);
}

TEST(Formula, TextRoundTrip) {
  const Formula f = length5_formula(5, 2);
  const Formula g = parse_formula(format_formula(f));
  EXPECT_EQ(g.vector, f.vector);
  EXPECT_EQ(g.K, 5);
  const auto basis = parse_basis(format_basis({f, gv_formula(2, {1, 2, 2})}, "sample"));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0].vector, f.vector);
}

TEST(Formula, HomogeneousComponents) {
  Formula f = gv_formula(2, {1, 1, 1});
  f.vector += gv_formula(1, {1, 2}).vector;
  const auto parts = homogeneous_components(f);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vector + parts[1].vector, f.vector);
  EXPECT_EQ(f.degrees(), (std::set<int>{1, 2}));
}

TEST(Evaluate, MatchesTheNaivePairing) {
  std::mt19937_64 rng(5);
  const Formula f = length5_formula(3, 1);
  for (int t = 0; t < 100; ++t) {
    const GaussDiagram g = random_gauss(static_cast<int>(rng() % 6), 3, {0, 1, 2, 3}, rng);
    EXPECT_EQ(evaluate(f, g), evaluate_naive(f, g));
    EXPECT_EQ(evaluate(f, g), evaluate(f, g.rotated(static_cast<int>(rng() % 7))));
  }
  EXPECT_THROW(evaluate(f, GaussDiagram(4)), std::invalid_argument);
}

TEST(Verify, ZeroLengthWalksAreConstant) {
  std::mt19937_64 rng(1);
  const GaussDiagram g = random_gauss(3, 2, {0, 1, 2}, rng);
  const auto r = verify_invariance({length5_formula(2, 1)}, g, 5, 0, 9, WalkSampler{{0, 1, 2}, 12});
  EXPECT_TRUE(r.constant);
  EXPECT_EQ(r.steps, 0u);
}

TEST(Verify, FindsANonInvariant) {
  std::mt19937_64 rng(2);
  const GaussDiagram g = random_gauss(3, 2, {0, 1, 2}, rng);
  const Formula bad = make_formula(ArrowComb(ArrowDiagram(2, {{1, 0, 0, 0}})), 2, Provenance::file);
  const auto r = verify_invariance({bad}, g, 50, 20, 9, WalkSampler{{0, 1, 2}, 12});
  EXPECT_FALSE(r.constant);
  EXPECT_FALSE(r.violation.empty());
}

TEST(Verify, ThreadCountDoesNotChangeTheOutcome) {
  std::mt19937_64 rng(3);
  const GaussDiagram g = random_gauss(2, 2, {0, 1, 2}, rng);
  const std::vector<Formula> fs{gv_formula(2, {1, -1, 2}), length5_formula(2, 1)};
  const WalkSampler s{{0, 1, 2}, 10};
  const auto one = verify_invariance(fs, g, 40, 15, 77, s, 1);
  const auto four = verify_invariance(fs, g, 40, 15, 77, s, 4);
  EXPECT_TRUE(one.constant);
  EXPECT_EQ(one.steps, four.steps);
  EXPECT_EQ(one.per_kind, four.per_kind);
}

TEST(Catalog, LengthFiveFormula) {
  for (Marking K : {Marking{-3}, Marking{1}, Marking{2}, Marking{5}}) {
    for (Marking a : {Marking{1}, Marking{2}, Marking{-1}, K}) {
      const Formula f = length5_formula(K, a);
      EXPECT_TRUE(check_formula(f).pass()) << "K=" << K << " a=" << a;
      EXPECT_EQ(f.vector.size(), a == K ? 3u : 5u);
    }
  }
  EXPECT_THROW(length5_formula(3, 0), std::invalid_argument);
}

TEST(Catalog, ClosedButNotInvariant) {
  const Formula f = counterexample_formula(4, 1);
  const CheckReport r = check_formula(f);
  EXPECT_TRUE(r.d_zero);
  EXPECT_TRUE(r.family(Family::AP1).pass());
  EXPECT_FALSE(r.family(Family::AP2).pass());
  EXPECT_THROW(counterexample_formula(4, 4), std::invalid_argument);
}
