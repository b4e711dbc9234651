#include <gtest/gtest.h>

#include "lat/catalog.hpp"
#include "lat/enumeration.hpp"
#include "lat/expr.hpp"
#include "lat/reduction.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace lat;

namespace {

std::int64_t count_with_norm(const ShortVectorList& list, std::int64_t norm) {
  std::int64_t n = 0;
  for (const auto& v : list.vectors) n += v.norm == norm ? 2 : 0;
  return n;
}

IntVector ints(std::initializer_list<int> values) { return IntVector(values.begin(), values.end()); }

}  // namespace

TEST(ShortVectors, Examples) {
  const ShortVectorList list = short_vectors(diagonal_gram({1, 1}), Rational(2));
  const std::vector<ShortVector> expected = {{{0, 1}, 1}, {{1, 0}, 1}, {{1, -1}, 2}, {{1, 1}, 2}};
  EXPECT_EQ(list.vectors, expected);
  EXPECT_TRUE(short_vectors(diagonal_gram({2}), Rational(1)).vectors.empty());
  EXPECT_EQ(count_with_norm(short_vectors(catalog("E8"), Rational(2)), 2), 240);
}

TEST(ShortVectors, RationalBoundIsFloored) {
  const GramMatrix g = catalog("An", 2);
  EXPECT_EQ(short_vectors(g, Rational(5, 2)).vectors, short_vectors(g, Rational(2)).vectors);
  EXPECT_EQ(short_vectors(g, Rational(5, 2)).bound, Rational(5, 2));
}

TEST(ShortVectors, ListInvariants) {
  const GramMatrix g = parse_expr("E6 + diag(1,3)");
  const ShortVectorList list = short_vectors(g, Rational(4));
  for (std::size_t i = 0; i < list.vectors.size(); ++i) {
    const auto& v = list.vectors[i];
    EXPECT_GT(v.norm, 0);
    EXPECT_LE(v.norm, 4);
    EXPECT_EQ(inner(g, std::span<const std::int64_t>(v.coords), std::span<const std::int64_t>(v.coords)), v.norm);
    auto first = std::find_if(v.coords.begin(), v.coords.end(), [](std::int64_t c) { return c != 0; });
    ASSERT_NE(first, v.coords.end());
    EXPECT_GT(*first, 0);
    if (i > 0) {
      const auto& p = list.vectors[i - 1];
      EXPECT_TRUE(std::tie(p.norm, p.coords) < std::tie(v.norm, v.coords));
    }
  }
}

TEST(ShortVectors, AgreesWithBoxScan) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const GramMatrix g = test::random_small_gram(rng, n, 5);
    const std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 8);
    const auto expected = oracle::short_vectors(g, bound);
    const ShortVectorList got = short_vectors(g, Rational(bound));
    ASSERT_EQ(got.vectors.size(), expected.size()) << to_text(g) << "bound " << bound;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(got.vectors[i].coords, expected[i].coords);
      EXPECT_EQ(got.vectors[i].norm, expected[i].norm);
    }
  }
}

TEST(ShortVectors, E8NormFourMatchesCoordinateModel) {
  EXPECT_EQ(norm_counts(catalog("E8"), 4)[4], oracle::e8_coordinate_count(4));
  EXPECT_EQ(norm_counts(catalog("E8"), 4)[2], oracle::e8_coordinate_count(2));
}

TEST(ForEachShortVector, VisitsOncePerPair) {
  const GramMatrix g = catalog("Dn", 4);
  std::int64_t visits = 0;
  for_each_short_vector(g, Integer(2), [&](std::span<const std::int64_t>, std::int64_t norm) {
    EXPECT_EQ(norm, 2);
    ++visits;
  });
  EXPECT_EQ(visits, 12);
}

TEST(MinNorm, Examples) {
  EXPECT_EQ(min_norm(catalog("E8")), 2);
  EXPECT_EQ(min_norm(catalog("Leech")), 4);
  EXPECT_EQ(min_norm(diagonal_gram({1})), 1);
  EXPECT_EQ(min_norm(diagonal_gram({3, 5})), 3);
}

TEST(MinDualNorm, Examples) {
  EXPECT_EQ(min_dual_norm(diagonal_gram({2})), Rational(1, 2));
  EXPECT_EQ(min_dual_norm(catalog("E6")), Rational(4, 3));
  EXPECT_EQ(min_dual_norm(catalog("E6")), oracle::min_dual_norm(catalog("E6")));
  EXPECT_EQ(min_dual_norm(catalog("Lambda23")), 3);
}

TEST(MinDualNorm, SelfDualEqualsMinNorm) {
  for (const char* name : {"E8", "Leech"}) {
    const GramMatrix g = catalog(name);
    EXPECT_EQ(min_dual_norm(g), Rational(min_norm(g))) << name;
  }
  EXPECT_EQ(min_dual_norm(diagonal_gram({1, 1, 1})), 1);
}

TEST(MinDualNorm, AgreesWithOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const GramMatrix g = test::random_small_gram(rng, 1 + trial % 3, 4);
    EXPECT_EQ(min_dual_norm(g), oracle::min_dual_norm(g)) << to_text(g);
  }
}

TEST(ScaledDual, IsTheAdjugate) {
  const GramMatrix g = catalog("E7");
  const GramMatrix s = scaled_dual(g);
  const IntMatrix product = g.entries() * s.entries();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(product(i, j), i == j ? det(g) : Integer(0));
}

TEST(GeneratedByNorms, Examples) {
  EXPECT_TRUE(generated_by_norms_up_to(diagonal_gram({1, 1, 1}), 1));
  EXPECT_TRUE(generated_by_norms_up_to(catalog("E8"), 2));
  EXPECT_FALSE(generated_by_norms_up_to(diagonal_gram({1, 4}), 1));
  EXPECT_TRUE(generated_by_norms_up_to(diagonal_gram({1, 4}), 4));
  EXPECT_FALSE(generated_by_norms_up_to(catalog("Dn", 4), 1));
  EXPECT_TRUE(generated_by_norms_up_to(catalog("Leech"), 4));
}

TEST(GeneratedByNorms, FailsBelowTheMinimum) {
  EXPECT_FALSE(generated_by_norms_up_to(scale(diagonal_gram({1, 1, 1, 1}), 2), 1));
  EXPECT_FALSE(generated_by_norms_up_to(catalog("DnPlus", 8), 1));
  EXPECT_TRUE(generated_by_norms_up_to(catalog("DnPlus", 8), 2));
}

TEST(Projection, Examples) {
  const GramMatrix e8z = parse_expr("E8 + Zn(1)");
  IntMatrix first(9, 8);
  for (std::size_t i = 0; i < 8; ++i) first(i, i) = 1;
  const IntVector e9 = ints({0, 0, 0, 0, 0, 0, 0, 0, 1});
  const Projection p0 = project_onto_sublattice(e8z, first, e9);
  EXPECT_EQ(p0.norm, 0);
  for (const auto& c : p0.coords) EXPECT_EQ(c, 0);

  const Projection p1 = project_onto_sublattice(diagonal_gram({1, 1}), from_rows({{1}, {0}}), ints({1, 1}));
  EXPECT_EQ(p1.coords, RationalVector{Rational(1)});
  EXPECT_EQ(p1.norm, 1);

  const Projection p2 = project_onto_sublattice(make_gram(2, {{2, 1}, {1, 2}}), from_rows({{1}, {0}}), ints({0, 1}));
  EXPECT_EQ(p2.coords, RationalVector{Rational(1, 2)});
  EXPECT_EQ(p2.norm, Rational(1, 2));
  EXPECT_TRUE(p2.in_dual);
}

TEST(Projection, SingularSublattice) {
  EXPECT_THROW(project_onto_sublattice(diagonal_gram({1, 1}), from_rows({{1, 2}, {1, 2}}), ints({1, 0})),
               SingularSublattice);
}

TEST(Projection, ContractAndShrinkage) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const GramMatrix q = test::random_gram(rng, n, 1);
    const std::size_t m = 1 + trial % (n - 1);
    IntMatrix basis(n, m);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) basis(i, j) = entry(rng);
      if (determinant(basis.transpose() * basis) != 0) break;
    }
    IntVector v(n);
    for (auto& x : v) x = entry(rng);
    const Projection p = project_onto_sublattice(q, basis, v);
    const RationalMatrix gl = to_rational(basis.transpose() * q.entries() * basis);
    const Integer vv = inner(q, std::span<const Integer>(v), std::span<const Integer>(v));
    for (std::size_t j = 0; j < m; ++j) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < m; ++k) lhs += p.coords[k] * gl(k, j);
      const IntVector w = basis.column(j);
      EXPECT_EQ(lhs, Rational(inner(q, std::span<const Integer>(v), std::span<const Integer>(w))));
    }
    EXPECT_TRUE(p.in_dual);
    EXPECT_LE(p.norm, Rational(vv));
  }
  const GramMatrix a2 = catalog("An", 2);
  const Projection inside = project_onto_sublattice(a2, IntMatrix::identity(2), ints({3, -1}));
  EXPECT_EQ(inside.norm, Rational(inner(a2, std::span<const Integer>(ints({3, -1})), std::span<const Integer>(ints({3, -1})))));
}

TEST(Enumeration, IsometryInvariance) {
  for (const char* e : {"E7", "An(3) + diag(2,5)", "Dn(5) + Zn(1)"}) {
    const GramMatrix g = parse_expr(e);
    const auto counts = norm_counts(g, 6);
    const Integer mn = min_norm(g);
    const Rational mdn = min_dual_norm(g);
    const bool gen = generated_by_norms_up_to(g, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const GramMatrix h = randomize_basis(g, seed);
      EXPECT_EQ(norm_counts(h, 6), counts) << e;
      EXPECT_EQ(min_norm(h), mn) << e;
      EXPECT_EQ(min_dual_norm(h), mdn) << e;
      EXPECT_EQ(generated_by_norms_up_to(h, 2), gen) << e;
    }
  }
}
