#include <gtest/gtest.h>

#include "lat/catalog.hpp"
#include "lat/enumeration.hpp"
#include "lat/expr.hpp"
#include "lat/reduction.hpp"
#include "test_util.hpp"

using namespace lat;

void expect_valid_reduction(const GramMatrix& g, const ReducedBasis& r) {
  EXPECT_EQ(r.transform.transpose() * g.entries() * r.transform, r.gram.entries());
  const Integer d = determinant(r.transform);
  EXPECT_TRUE(d == 1 || d == -1);
  EXPECT_TRUE(is_lll_reduced(r.gram));
}

TEST(Lll, ReducedInputIsUnchanged) {
  for (const char* e : {"diag(1,1,2)", "An(2)", "Zn(4)", "diag(1,2,3)"}) {
    const GramMatrix g = parse_expr(e);
    const ReducedBasis r = lll_reduce(g);
    EXPECT_EQ(r.gram, g) << e;
    EXPECT_EQ(r.transform, IntMatrix::identity(g.rank())) << e;
  }
}

TEST(Lll, RandomizedE8HasRootBasis) {
  const GramMatrix e8 = catalog("E8");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GramMatrix messy = randomize_basis(e8, seed);
    const ReducedBasis r = lll_reduce(messy);
    expect_valid_reduction(messy, r);
    EXPECT_EQ(r.gram.max_diagonal(), 2) << "seed " << seed;
    EXPECT_EQ(norm_counts(r.gram, 4), norm_counts(e8, 4));
  }
}

TEST(Lll, RankZeroAndOne) {
  const ReducedBasis empty = lll_reduce(GramMatrix());
  EXPECT_EQ(empty.gram.rank(), 0u);
  const ReducedBasis one = lll_reduce(diagonal_gram({5}));
  EXPECT_EQ(one.gram, diagonal_gram({5}));
}

TEST(Lll, DeltaIsValidated) {
  const GramMatrix g = catalog("E6");
  EXPECT_THROW(lll_reduce(g, Rational(1, 4)), std::invalid_argument);
  EXPECT_THROW(lll_reduce(g, Rational(1)), std::invalid_argument);
  const GramMatrix messy = randomize_basis(g, 3);
  const ReducedBasis r = lll_reduce(messy, Rational(99, 100));
  EXPECT_EQ(r.transform.transpose() * messy.entries() * r.transform, r.gram.entries());
  EXPECT_TRUE(is_lll_reduced(r.gram, Rational(99, 100)));
}

TEST(Lll, InvariantsOverSeeds) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const GramMatrix g = test::random_gram(rng, 2 + trial % 5, 2);
    const ReducedBasis r = lll_reduce(g);
    expect_valid_reduction(g, r);
    EXPECT_EQ(det(r.gram), det(g));
    EXPECT_EQ(min_norm(r.gram), min_norm(g));
    EXPECT_EQ(norm_counts(r.gram, 6), norm_counts(g, 6));
  }
}

TEST(Lll, IsLllReducedDetectsBadBases) {
  EXPECT_FALSE(is_lll_reduced(make_gram(2, {{1, 1}, {1, 2}})));
  EXPECT_FALSE(is_lll_reduced(diagonal_gram({4, 1})));
  EXPECT_TRUE(is_lll_reduced(diagonal_gram({1, 4})));
}

TEST(RandomizeBasis, IsDeterministicIsometry) {
  const GramMatrix g = parse_expr("E7 + diag(2,3)");
  EXPECT_EQ(randomize_basis(g, 17), randomize_basis(g, 17));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GramMatrix h = randomize_basis(g, seed);
    EXPECT_EQ(det(h), det(g));
    EXPECT_EQ(norm_counts(h, 4), norm_counts(g, 4));
  }
  const IntMatrix u = random_unimodular(6, 9);
  const Integer d = determinant(u);
  EXPECT_TRUE(d == 1 || d == -1);
}
