#include <gtest/gtest.h>

#include "lat/catalog.hpp"
#include "lat/embedding.hpp"
#include "lat/enumeration.hpp"
#include "lat/expr.hpp"
#include "lat/reduction.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace lat;

namespace {

const GramMatrix kA = diagonal_gram({1, 1, 2});
const GramMatrix kB = diagonal_gram({1, 1});
const GramMatrix kC = diagonal_gram({2, 2, 2});

Embedding vector_embedding(const GramMatrix& q, const std::vector<std::int64_t>& v) {
  const Integer n = inner(q, std::span<const std::int64_t>(v), std::span<const std::int64_t>(v));
  return make_embedding(make_gram(1, {{static_cast<long long>(n)}}), q, from_columns(q.rank(), {v}));
}

// A random sublattice of g of the given rank, as T^T g T with independent columns.
GramMatrix random_sublattice(std::mt19937_64& rng, const GramMatrix& g, std::size_t rank) {
  std::uniform_int_distribution<int> entry(-1, 1);
  for (;;) {
    IntMatrix t(g.rank(), rank);
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t j = 0; j < rank; ++j) t(i, j) = entry(rng);
    const IntMatrix sub = t.transpose() * g.entries() * t;
    if (determinant(sub) != 0) return make_gram(sub);
  }
}

}  // namespace

TEST(Represents, Examples) {
  const auto e = represents(kA, kC);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->verify());
  EXPECT_EQ(e->map.transpose() * kA.entries() * e->map, kC.entries());
  EXPECT_FALSE(represents(kB, kA).has_value());
  EXPECT_FALSE(represents(kC, kA).has_value());
  EXPECT_TRUE(represents(kA, kB).has_value());
  EXPECT_FALSE(represents(diagonal_gram({1}), kB).has_value());
  EXPECT_TRUE(represents(kA, GramMatrix()).has_value());
}

TEST(Represents, LargerExamples) {
  EXPECT_TRUE(represents(catalog("E8"), catalog("Dn", 8)).has_value());
  EXPECT_TRUE(represents(catalog("E8"), catalog("E7")).has_value());
  EXPECT_TRUE(represents(catalog("E8"), catalog("An", 8)).has_value());
  EXPECT_FALSE(represents(catalog("E8"), diagonal_gram({1})).has_value());
  EXPECT_TRUE(represents(diagonal_gram({1, 1, 1, 1}), catalog("Dn", 4)).has_value());
  EXPECT_FALSE(represents(catalog("E6"), catalog("Dn", 6)).has_value());
}

TEST(IsIsometric, Examples) {
  const GramMatrix g = parse_expr("E6 + diag(1,2)");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto iso = is_isometric(g, randomize_basis(g, seed));
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(iso->verify());
    const Integer d = determinant(iso->map);
    EXPECT_TRUE(d == 1 || d == -1);
  }
  EXPECT_FALSE(is_isometric(catalog("E8"), catalog("Zn", 8)).has_value());
  EXPECT_FALSE(is_isometric(diagonal_gram({2}), diagonal_gram({1})).has_value());
  EXPECT_FALSE(is_isometric(kA, kB).has_value());
  EXPECT_TRUE(is_isometric(catalog("DnPlus", 8), catalog("E8")).has_value());
  EXPECT_TRUE(is_isometric(make_gram(2, {{2, 1}, {1, 2}}), catalog("An", 2)).has_value());
}

TEST(OrthogonalComplement, Examples) {
  const Embedding c1 = orthogonal_complement(kB, vector_embedding(kB, {1, 0}));
  EXPECT_EQ(c1.source, diagonal_gram({1}));
  EXPECT_TRUE(c1.verify());
  const Embedding c2 = orthogonal_complement(kB, vector_embedding(kB, {1, 1}));
  EXPECT_EQ(c2.source, diagonal_gram({2}));

  const GramMatrix leech = catalog("Leech");
  const ShortVectorList mins = short_vectors(leech, Rational(4));
  ASSERT_FALSE(mins.vectors.empty());
  const Embedding c3 = orthogonal_complement(leech, vector_embedding(leech, mins.vectors.front().coords));
  EXPECT_EQ(c3.source.rank(), 23u);
  EXPECT_EQ(det(c3.source), 4);
  EXPECT_TRUE(is_lll_reduced(c3.source));
}

TEST(OrthogonalComplement, IsOrthogonalAndSaturated) {
  const GramMatrix q = parse_expr("E7 + diag(1,3)");
  const auto e = represents(q, catalog("An", 3));
  ASSERT_TRUE(e.has_value());
  const Embedding c = orthogonal_complement(q, *e);
  EXPECT_EQ(c.source.rank(), 6u);
  const IntMatrix cross = e->map.transpose() * q.entries() * c.map;
  for (const auto& x : cross.data()) EXPECT_EQ(x, 0);
  // Saturation: the complement of the complement contains e's image primitively.
  const Embedding back = orthogonal_complement(q, c);
  EXPECT_EQ(back.source.rank(), 3u);
  EXPECT_TRUE(represents(back.source, catalog("An", 3)).has_value());
}

TEST(SummandSplit, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GramMatrix q = randomize_basis(parse_expr("E8 + Zn(1)"), seed);
    const auto e = represents(q, catalog("E8"));
    ASSERT_TRUE(e.has_value());
    const SummandSplit s = unimodular_summand_split(q, *e);
    EXPECT_EQ(s.complement, diagonal_gram({1}));
    EXPECT_TRUE(s.certificate.verify());
    EXPECT_EQ(s.certificate.source, direct_sum(catalog("E8"), s.complement));
  }
  const SummandSplit b = unimodular_summand_split(kB, vector_embedding(kB, {1, 0}));
  EXPECT_EQ(b.complement, diagonal_gram({1}));

  const GramMatrix e8a2 = parse_expr("E8 + An(2)");
  const auto e = represents(e8a2, catalog("E8"));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(is_isometric(unimodular_summand_split(e8a2, *e).complement, catalog("An", 2)).has_value());
}

TEST(SummandSplit, RejectsNonUnimodular) {
  EXPECT_THROW(unimodular_summand_split(kA, vector_embedding(kA, {0, 0, 1})), NotUnimodular);
}

TEST(MakeEmbedding, RejectsBadCertificates) {
  EXPECT_THROW(make_embedding(diagonal_gram({2}), kB, from_rows({{1}, {0}})), std::logic_error);
  EXPECT_THROW(make_embedding(kB, kB, from_rows({{1, 1}, {0, 0}})), std::logic_error);
}

TEST(Represents, AgreesWithOracle) {
  std::mt19937_64 rng(31);
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t nq = 1 + trial % 3;
    const std::size_t nl = 1 + (trial / 3) % nq;
    const GramMatrix q = test::random_small_gram(rng, nq, 4);
    const GramMatrix l = trial % 2 == 0 ? test::random_small_gram(rng, nl, 4) : random_sublattice(rng, q, nl);
    if (l.max_diagonal() > 8) continue;
    const bool expected = oracle::represents(q, l);
    const auto got = represents(q, l);
    EXPECT_EQ(got.has_value(), expected) << to_text(q) << to_text(l);
    if (got) {
      EXPECT_TRUE(got->verify());
      ++yes;
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(Represents, Transitivity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const GramMatrix q = test::random_gram(rng, 3 + trial % 2, 1, 2);
    const GramMatrix l1 = random_sublattice(rng, q, 2 + trial % 2);
    const GramMatrix l2 = random_sublattice(rng, l1, 1 + trial % 2);
    const auto outer = represents(q, l1);
    const auto inner_map = represents(l1, l2);
    ASSERT_TRUE(outer && inner_map);
    const Embedding composed = compose(*outer, *inner_map);
    EXPECT_TRUE(composed.verify());
    EXPECT_TRUE(represents(q, l2).has_value());
  }
}

TEST(Embedding, DirectSumOfCertificates) {
  const auto a = represents(catalog("E8"), catalog("Dn", 4));
  const auto b = represents(kA, kC);
  ASSERT_TRUE(a && b);
  const Embedding s = direct_sum(std::vector<Embedding>{*a, *b});
  EXPECT_TRUE(s.verify());
  EXPECT_EQ(s.target, direct_sum(catalog("E8"), kA));
  EXPECT_EQ(s.source, direct_sum(catalog("Dn", 4), kC));
}
