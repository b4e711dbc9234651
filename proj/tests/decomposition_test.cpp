#include <gtest/gtest.h>

#include "lat/catalog.hpp"
#include "lat/decomposition.hpp"
#include "lat/expr.hpp"
#include "lat/reduction.hpp"

using namespace lat;

namespace {

void expect_sound(const GramMatrix& g, const Decomposition& d) {
  ASSERT_EQ(d.summands.size(), d.embeddings.size());
  std::size_t rank = 0;
  Integer product = 1;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    EXPECT_TRUE(d.embeddings[i].verify());
    EXPECT_EQ(d.embeddings[i].source, d.summands[i]);
    EXPECT_EQ(d.embeddings[i].target, g);
    EXPECT_TRUE(is_lll_reduced(d.summands[i]));
    rank += d.summands[i].rank();
    product *= det(d.summands[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const IntMatrix cross = d.embeddings[i].map.transpose() * g.entries() * d.embeddings[j].map;
      for (const auto& x : cross.data()) EXPECT_EQ(x, 0);
    }
    if (i > 0) {
      const GramMatrix& p = d.summands[i - 1];
      const GramMatrix& s = d.summands[i];
      EXPECT_TRUE(p.rank() < s.rank() || (p.rank() == s.rank() && det(p) <= det(s)));
    }
  }
  EXPECT_EQ(rank, g.rank());
  EXPECT_EQ(product, det(g));
  const Embedding whole = direct_sum(d.embeddings);
  EXPECT_TRUE(is_isometric(whole.source, g).has_value());
}

std::vector<GramMatrix> grams(std::initializer_list<const char*> exprs) {
  std::vector<GramMatrix> out;
  for (const char* e : exprs) out.push_back(parse_expr(e));
  return out;
}

}  // namespace

TEST(Decompose, Examples) {
  const Decomposition z2 = indecomposable_summands(diagonal_gram({1, 1}));
  EXPECT_EQ(z2.summands, grams({"Zn(1)", "Zn(1)"}));
  expect_sound(diagonal_gram({1, 1}), z2);

  const GramMatrix a = diagonal_gram({1, 1, 2});
  const Decomposition da = indecomposable_summands(a);
  EXPECT_EQ(da.summands, grams({"Zn(1)", "Zn(1)", "diag(2)"}));
  expect_sound(a, da);

  const Decomposition expected = indecomposable_summands(parse_expr("E8 + Zn(3) + An(2)"));
  ASSERT_EQ(expected.summands.size(), 5u);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GramMatrix g = randomize_basis(parse_expr("E8 + Zn(3) + An(2)"), seed);
    const Decomposition d = indecomposable_summands(g);
    expect_sound(g, d);
    EXPECT_TRUE(same_summands(d, expected));
    ASSERT_EQ(d.summands.size(), 5u);
    EXPECT_TRUE(is_isometric(d.summands[3], catalog("An", 2)).has_value());
    EXPECT_TRUE(is_isometric(d.summands[4], catalog("E8")).has_value());
  }
}

TEST(Decompose, RankZero) {
  EXPECT_TRUE(indecomposable_summands(GramMatrix()).summands.empty());
}

TEST(Decompose, NonDiagonalSummands) {
  const GramMatrix g = randomize_basis(parse_expr("Dn(4) + An(3) + E6 + diag(3)"), 4);
  const Decomposition d = indecomposable_summands(g);
  expect_sound(g, d);
  EXPECT_EQ(d.summands.size(), 4u);
}

TEST(IsIndecomposable, Examples) {
  EXPECT_TRUE(is_indecomposable(catalog("E8")));
  EXPECT_TRUE(is_indecomposable(diagonal_gram({1})));
  EXPECT_FALSE(is_indecomposable(diagonal_gram({1, 1})));
  EXPECT_TRUE(is_indecomposable(catalog("An", 5)));
  EXPECT_TRUE(is_indecomposable(catalog("DnPlus", 12)));
  EXPECT_TRUE(is_indecomposable(catalog("Leech")));
  EXPECT_TRUE(is_indecomposable(catalog("Lambda23")));
}

TEST(Coprime, Examples) {
  EXPECT_TRUE(coprime(catalog("E8"), diagonal_gram({1})));
  EXPECT_FALSE(coprime(parse_expr("E8 + Zn(1)"), diagonal_gram({1})));
  EXPECT_TRUE(coprime(catalog("Leech"), catalog("E8")));
  EXPECT_FALSE(coprime(catalog("E8"), catalog("DnPlus", 8)));
  EXPECT_TRUE(coprime(catalog("DnPlus", 12), catalog("E8")));
}

TEST(Decompose, Idempotence) {
  const GramMatrix g = randomize_basis(parse_expr("E7 + An(2) + diag(1,5)"), 12);
  for (const GramMatrix& s : indecomposable_summands(g).summands) {
    const Decomposition again = indecomposable_summands(s);
    ASSERT_EQ(again.summands.size(), 1u);
    EXPECT_EQ(again.summands.front(), s);
  }
}

TEST(Decompose, UniqueUnderRebasing) {
  for (const char* e : {"E6 + E6 + Zn(2)", "Dn(5) + diag(2,2,3)", "An(4) + E7"}) {
    const GramMatrix g = parse_expr(e);
    const Decomposition base = indecomposable_summands(g);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const GramMatrix h = randomize_basis(g, seed);
      const Decomposition d = indecomposable_summands(h);
      EXPECT_TRUE(same_summands(d, base)) << e << " seed " << seed;
    }
  }
}
