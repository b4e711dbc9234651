#include <gtest/gtest.h>

#include <random>

#include "lat/catalog.hpp"
#include "lat/expr.hpp"
#include "lat/gram.hpp"

using namespace lat;

TEST(MakeGram, AcceptsValidMatrices) {
  EXPECT_EQ(make_gram(1, {{1}}), diagonal_gram({1}));
  const GramMatrix a = make_gram(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  EXPECT_EQ(a.rank(), 3u);
  EXPECT_EQ(det(a), 2);
}

TEST(MakeGram, RejectsIndefinite) {
  try {
    make_gram(2, {{1, 2}, {2, 1}});
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_EQ(e.minor_size, 2u);
  }
  EXPECT_THROW(make_gram(1, {{0}}), NotPositiveDefinite);
  EXPECT_THROW(make_gram(2, {{-1, 0}, {0, 1}}), NotPositiveDefinite);
}

TEST(MakeGram, RejectsAsymmetric) {
  try {
    make_gram(2, {{2, 1}, {0, 2}});
    FAIL() << "expected NotSymmetric";
  } catch (const NotSymmetric& e) {
    EXPECT_EQ(e.row + e.col, 1u);
  }
}

TEST(Det, KnownValues) {
  EXPECT_EQ(det(catalog("Zn", 8)), 1);
  EXPECT_EQ(det(catalog("E8")), 1);
  EXPECT_EQ(det(catalog("E7")), 2);
  EXPECT_EQ(det(catalog("E6")), 3);
  for (std::int64_t n = 1; n <= 6; ++n) EXPECT_EQ(det(catalog("An", n)), n + 1);
  for (std::int64_t n = 2; n <= 6; ++n) EXPECT_EQ(det(catalog("Dn", n)), 4);
  EXPECT_EQ(det(catalog("DnPlus", 12)), 1);
  EXPECT_EQ(det(GramMatrix()), 1);
}

TEST(DirectSum, Examples) {
  const GramMatrix one = diagonal_gram({1});
  EXPECT_EQ(direct_sum(one, one), diagonal_gram({1, 1}));
  const GramMatrix a = direct_sum(catalog("E8"), one);
  EXPECT_EQ(a.rank(), 9u);
  EXPECT_EQ(a(8, 8), 1);
  EXPECT_EQ(a(0, 8), 0);
  const GramMatrix e6 = catalog("E6");
  EXPECT_EQ(direct_sum(e6, GramMatrix()), e6);
  EXPECT_EQ(direct_sum(GramMatrix(), e6), e6);
}

TEST(DirectSum, DeterminantIsMultiplicative) {
  const std::vector<GramMatrix> pool = {catalog("E6"), catalog("An", 3), catalog("Dn", 5), diagonal_gram({2, 3}),
                                        parse_expr("diag(1,1,2)")};
  for (const auto& x : pool)
    for (const auto& y : pool) EXPECT_EQ(det(direct_sum(x, y)), det(x) * det(y));
}

TEST(Scale, Examples) {
  EXPECT_EQ(scale(diagonal_gram({1}), 2), diagonal_gram({2}));
  EXPECT_EQ(scale(diagonal_gram({1, 1, 1}), 2), diagonal_gram({2, 2, 2}));
  const GramMatrix e7 = catalog("E7");
  EXPECT_EQ(scale(e7, 1), e7);
  Integer expected = det(e7);
  for (int i = 0; i < 7; ++i) expected *= 3;
  EXPECT_EQ(det(scale(e7, 3)), expected);
}

TEST(DualGram, Examples) {
  const RationalMatrix half = dual_gram(diagonal_gram({2}));
  EXPECT_EQ(half(0, 0), Rational(1, 2));
  EXPECT_TRUE(to_integer(dual_gram(catalog("E8"))).has_value());
  EXPECT_FALSE(to_integer(dual_gram(catalog("E7"))).has_value());
}

TEST(DualGram, IsAnInvolution) {
  for (const char* e : {"diag(1,1,2)", "E6", "An(4)", "Dn(5)", "E7 + diag(3)"}) {
    const GramMatrix g = parse_expr(e);
    const RationalMatrix inv = dual_gram(g);
    EXPECT_EQ(inverse(inv), to_rational(g.entries())) << e;
    EXPECT_EQ(to_rational(g.entries()) * inv, to_rational(IntMatrix::identity(g.rank()))) << e;
  }
}

TEST(Catalog, StandardForms) {
  EXPECT_EQ(catalog_by_name("Zn(3)"), diagonal_gram({1, 1, 1}));
  EXPECT_EQ(catalog("An", 2), make_gram(2, {{2, -1}, {-1, 2}}));
  EXPECT_EQ(catalog("Dn", 1), diagonal_gram({4}));
  for (const char* name : {"E6", "E7", "E8"}) {
    const GramMatrix g = catalog(name);
    for (std::size_t i = 0; i < g.rank(); ++i) EXPECT_EQ(g(i, i), 2);
  }
}

TEST(Catalog, LeechAndLaminated) {
  const GramMatrix leech = catalog("Leech");
  EXPECT_EQ(leech.rank(), 24u);
  EXPECT_EQ(det(leech), 1);
  const GramMatrix l23 = catalog("Lambda23");
  EXPECT_EQ(l23.rank(), 23u);
  EXPECT_EQ(det(l23), 4);
}

TEST(Catalog, UnknownNames) {
  EXPECT_THROW(catalog("E9"), UnknownName);
  EXPECT_THROW(catalog_by_name("Leech(3)"), Error);
  EXPECT_THROW(catalog("DnPlus", 6), Error);
  EXPECT_TRUE(catalog_has("Lambda23"));
  EXPECT_FALSE(catalog_has("lambda23"));
  EXPECT_TRUE(catalog_takes_argument("An"));
  EXPECT_FALSE(catalog_takes_argument("E8"));
}

TEST(ParseExpr, Examples) {
  EXPECT_EQ(parse_expr("diag(1,1,2)"), diagonal_gram({1, 1, 2}));
  EXPECT_EQ(parse_expr("E8 + Zn(1)"), direct_sum(catalog("E8"), diagonal_gram({1})));
  EXPECT_EQ(parse_expr("2*Zn(3)"), diagonal_gram({2, 2, 2}));
  EXPECT_EQ(parse_expr("An(2)^2"), direct_sum(catalog("An", 2), catalog("An", 2)));
  EXPECT_EQ(parse_expr("3*(Zn(1) + diag(2))"), diagonal_gram({3, 6}));
  EXPECT_EQ(parse_expr("  diag( 1 , 2 )+E6 "), direct_sum(diagonal_gram({1, 2}), catalog("E6")));
}

TEST(ParseExpr, Errors) {
  try {
    parse_expr("diag(1,,2)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 7u);
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("E8 +"), ParseError);
  EXPECT_THROW(parse_expr("diag(0)"), ParseError);
  EXPECT_THROW(parse_expr("0*E8"), ParseError);
  EXPECT_THROW(parse_expr("E8^0"), ParseError);
  EXPECT_THROW(parse_expr("(E8"), ParseError);
  EXPECT_THROW(parse_expr("E8)"), ParseError);
  EXPECT_THROW(parse_expr("Foo"), UnknownName);
  EXPECT_THROW(parse_expr("An"), Error);
}

// Random expression trees print and re-parse to the same Gram.
LatticeExpr random_expr(std::mt19937_64& rng, int depth) {
  LatticeExpr e;
  const int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 5);
  switch (pick) {
    case 0: {
      static const char* names[] = {"Zn", "An", "Dn", "E6", "E8"};
      e.kind = LatticeExpr::Kind::Catalog;
      e.name = names[rng() % 5];
      if (catalog_takes_argument(e.name)) e.arg = 1 + static_cast<std::int64_t>(rng() % 3);
      break;
    }
    case 1:
      e.kind = LatticeExpr::Kind::Diag;
      for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) e.diag.push_back(1 + static_cast<std::int64_t>(rng() % 4));
      break;
    case 2:
      e.kind = LatticeExpr::Kind::Sum;
      for (std::size_t i = 0, n = 2 + rng() % 2; i < n; ++i) e.children.push_back(random_expr(rng, depth - 1));
      break;
    case 3:
      e.kind = LatticeExpr::Kind::Scale;
      e.factor = 1 + static_cast<std::int64_t>(rng() % 3);
      e.children.push_back(random_expr(rng, depth - 1));
      break;
    default:
      e.kind = LatticeExpr::Kind::Power;
      e.factor = 1 + static_cast<std::int64_t>(rng() % 2);
      e.children.push_back(random_expr(rng, depth - 1));
  }
  return e;
}

TEST(ParseExpr, PrettyPrinterRoundTrips) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const LatticeExpr e = random_expr(rng, 3);
    const std::string text = to_string(e);
    EXPECT_EQ(parse_expr(text), evaluate(e)) << text;
    EXPECT_EQ(to_string(parse_lattice_expr(text)), text);
  }
}

TEST(TextFormat, RoundTrip) {
  for (const char* e : {"E8", "diag(1,1,2)", "An(3) + 5*Zn(1)"}) {
    const GramMatrix g = parse_expr(e);
    EXPECT_EQ(parse_gram_text(to_text(g)), g);
  }
  EXPECT_EQ(to_text(diagonal_gram({1, 2})), "2\n1 0\n0 2\n");
}

TEST(TextFormat, CommentsAndErrors) {
  EXPECT_EQ(parse_gram_text("# A2\n2\n\n2 -1\n# middle\n-1 2\n"), catalog("An", 2));
  EXPECT_THROW(parse_gram_text("2\n1 0\n"), FormatError);
  EXPECT_THROW(parse_gram_text("2\n1 0 0\n0 1\n"), FormatError);
  EXPECT_THROW(parse_gram_text("x\n"), FormatError);
  EXPECT_THROW(parse_gram_text("1\n1\n2\n"), FormatError);
  EXPECT_THROW(parse_gram_text("2\n1 1\n1 1\n"), NotPositiveDefinite);
}
