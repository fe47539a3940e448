#include <gtest/gtest.h>

#include <random>

#include "arrowknot/ratlinalg.hpp"
#include "oracles.hpp"

using namespace arrowknot;

namespace {

std::vector<SparseVec> sparse_rows(const std::vector<std::vector<Rational>>& m) {
  std::vector<SparseVec> out;
  for (const auto& r : m) out.push_back(make_sparse(r));
  return out;
}

}  // namespace

TEST(RatLinAlg, ZeroMatrixKernelIsEverything) {
  Echelon e;
  EXPECT_EQ(e.kernel_basis(3).size(), 3u);
  EXPECT_EQ(rank({}), 0);
}

TEST(RatLinAlg, IdentityHasTrivialKernel) {
  Echelon e;
  for (int i = 0; i < 4; ++i) e.insert(SparseVec{{i, Rational(1)}});
  EXPECT_TRUE(e.kernel_basis(4).empty());
}

TEST(RatLinAlg, DuplicatedRowKeepsRank) {
  const SparseVec r{{0, Rational(1)}, {2, Rational(-3)}};
  EXPECT_EQ(rank({r, r}), 1);
  EXPECT_EQ(rank({r, axpy(SparseVec{}, Rational(5, 7), r)}), 1);
}

TEST(RatLinAlg, InSpanBasics) {
  const SparseVec a{{0, Rational(1)}, {1, Rational(2)}};
  const SparseVec b{{1, Rational(1)}, {2, Rational(1)}};
  EXPECT_TRUE(in_span(a, {a, b}));
  EXPECT_TRUE(in_span(axpy(a, Rational(1), b), {a, b}));
  Echelon e;
  e.insert(a);
  e.insert(b);
  for (const SparseVec& k : e.kernel_basis(3)) EXPECT_FALSE(in_span(k, {a, b}));
}

TEST(RatLinAlg, RankMatchesMinorsOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    const auto m = oracle::random_matrix(rows, cols, rng, static_cast<int>(rng() % 80));
    EXPECT_EQ(rank(sparse_rows(m)), oracle::rank_by_minors(m));
  }
}

TEST(RatLinAlg, KernelVectorsArePrimitiveAndAnnihilate) {
  std::mt19937_64 rng(4);
  const auto m = oracle::random_matrix(20, 30, rng);
  const auto rows = sparse_rows(m);
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  const auto ker = e.kernel_basis(30);
  // Independent elimination order for the rank.
  std::vector<SparseVec> reversed(rows.rbegin(), rows.rend());
  EXPECT_EQ(static_cast<int>(ker.size()) + rank(reversed), 30);
  for (const SparseVec& v : ker) {
    for (const SparseVec& r : rows) EXPECT_EQ(dot(r, v), 0);
    EXPECT_GT(v.front().second, 0);
    mpz_class g = 0;
    for (const auto& [c, x] : v) {
      EXPECT_EQ(x.get_den(), 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    EXPECT_EQ(g, 1);
  }
}

TEST(RatLinAlg, KernelSubspaceIsIndependentOfRowOrder) {
  std::mt19937_64 rng(8);
  auto m = oracle::random_matrix(8, 14, rng, 60);
  Echelon a;
  for (const auto& r : m) a.insert(make_sparse(r));
  std::shuffle(m.begin(), m.end(), rng);
  Echelon b;
  for (const auto& r : m) b.insert(make_sparse(r));
  const auto ka = a.kernel_basis(14);
  const auto kb = b.kernel_basis(14);
  ASSERT_EQ(ka.size(), kb.size());
  for (const auto& v : ka) EXPECT_TRUE(in_span(v, kb));
  for (const auto& v : kb) EXPECT_TRUE(in_span(v, ka));
}

TEST(RatLinAlg, PrimitiveScalesToCoprimeIntegers) {
  const SparseVec v{{1, Rational(-2, 3)}, {4, Rational(4, 9)}};
  const SparseVec p = primitive(v);
  EXPECT_EQ(p, (SparseVec{{1, Rational(3)}, {4, Rational(-2)}}));
}
