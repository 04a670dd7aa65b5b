#include <gtest/gtest.h>

#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

namespace {

QUniPoly expand(const Factorization& F) {
  QUniPoly p({F.unit}, "x");
  for (auto& f : F.factors)
    for (int k = 0; k < f.multiplicity; ++k) p = p * f.factor;
  return p;
}

std::vector<std::pair<QUniPoly, int>> parts(const Factorization& F) {
  std::vector<std::pair<QUniPoly, int>> out;
  for (auto& f : F.factors) out.emplace_back(f.factor, f.multiplicity);
  return out;
}

}  // namespace

TEST(Factor, SmallProducts) {
  auto F = factor_rational(Q("x^4 - 1"));
  EXPECT_EQ(parts(F), (std::vector<std::pair<QUniPoly, int>>{{Q("x - 1"), 1}, {Q("x + 1"), 1}, {Q("x^2 + 1"), 1}}));
  EXPECT_EQ(F.unit, Rational(1));
  EXPECT_EQ(factor_degrees(factor_rational(Q("(x^2 - 2)*(x^3 - 2)"))), (std::vector<int>{3, 2}));
  EXPECT_EQ(factor_rational(Q("x^4 + 1")).factors.size(), 1u);
}

TEST(Factor, UnitsAndMultiplicities) {
  auto F = factor_rational(Q("6*x^2/5 - 6/5"));
  EXPECT_EQ(F.unit, Rational(6, 5));
  EXPECT_EQ(expand(F), Q("6*x^2/5 - 6/5"));

  auto G = factor_rational(Q("(x - 1)^3*(x + 2)^2*(2*x + 1)"));
  EXPECT_EQ(parts(G), (std::vector<std::pair<QUniPoly, int>>{{Q("x - 1"), 3}, {Q("x + 2"), 2}, {Q("2*x + 1"), 1}}));
  EXPECT_EQ(expand(G), Q("(x - 1)^3*(x + 2)^2*(2*x + 1)"));

  auto H = factor_rational(Q("x^7 - x^2"));
  EXPECT_EQ(factor_degrees(H), (std::vector<int>{4, 1, 1, 1}));
  auto x = std::find_if(H.factors.begin(), H.factors.end(), [](auto& g) { return g.factor == Q("x"); });
  ASSERT_NE(x, H.factors.end());
  EXPECT_EQ(x->multiplicity, 2);
}

TEST(Factor, CyclotomicSplitting) {
  auto F = factor_rational(Q("x^12 - 1"));
  EXPECT_EQ(factor_degrees(F), (std::vector<int>{4, 2, 2, 2, 1, 1}));
  EXPECT_EQ(F.factors.back().factor, Q("x^4 - x^2 + 1"));
}

// Irreducible over Q but splits into factors of degree <= 2 modulo every
// prime, which forces the recombination search.
TEST(Factor, SwinnertonDyerIsIrreducible) {
  auto f = Q("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
  auto F = factor_rational(f);
  ASSERT_EQ(F.factors.size(), 1u);
  EXPECT_EQ(F.factors[0].factor, f);
  auto g = Q("(x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576)*(x^2 - 5)");
  EXPECT_EQ(factor_degrees(factor_rational(g)), (std::vector<int>{8, 2}));
}

TEST(Factor, LargeCoefficientsNeedHenselLifting) {
  auto f = Q("(x^3 - 123456789*x + 987654321)*(x^2 + 1000003*x - 99991)");
  auto F = factor_rational(f);
  EXPECT_EQ(parts(F),
            (std::vector<std::pair<QUniPoly, int>>{{Q("x^2 + 1000003*x - 99991"), 1},
                                                   {Q("x^3 - 123456789*x + 987654321"), 1}}));
}

TEST(Factor, Limits) {
  EXPECT_THROW(factor_rational(QUniPoly()), DomainError);
  EXPECT_THROW(factor_rational(Q("x^13 - 2")), DomainError);
  EXPECT_EQ(factor_rational(Q("7")).factors.size(), 0u);
}

TEST(Factor, SquarefreeDecomposition) {
  auto d = squarefree_decomposition(Q("(x - 1)*(x + 1)^2*(x^2 + 1)^3"));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], std::make_pair(Q("x - 1"), 1));
  EXPECT_EQ(d[1], std::make_pair(Q("x + 1"), 2));
  EXPECT_EQ(d[2], std::make_pair(Q("x^2 + 1"), 3));
}
