#include <gtest/gtest.h>

#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

namespace {

ParamPoly v(std::size_t i) { return ParamPoly::variable(i); }

}  // namespace

TEST(ParamPoly, ArithmeticAndDivision) {
  ParamPoly a = v(0) + v(1), b = v(0) - v(1);
  ParamPoly p = a * b;
  EXPECT_EQ(p, v(0).pow(2) - v(1).pow(2));
  EXPECT_EQ(p / a, b);
  EXPECT_FALSE((p + ParamPoly(1)).divide_exact(a).has_value());
  EXPECT_EQ(a.pow(3).total_degree(), 3);
  EXPECT_EQ((ParamPoly(6) * v(2)).content(), Integer(6));
}

TEST(ParamPoly, GcdOfSharedFactor) {
  ParamPoly g = v(0) * v(1) + ParamPoly(3) * v(2);
  ParamPoly a = g * (v(0) + ParamPoly(1)), b = g * (v(1).pow(2) - v(2));
  auto h = gcd(a, b);
  EXPECT_TRUE(h == g || h == -g);
  EXPECT_TRUE(gcd(v(0), v(1)).is_one());
}

TEST(RatFunc, CanonicalForm) {
  RatFunc x = RatFunc::param(0), y = RatFunc::param(1);
  RatFunc r = (x * x - y * y) / (x + y);
  EXPECT_EQ(r, x - y);
  EXPECT_TRUE(r.is_polynomial());
  RatFunc s = RatFunc(1) / (x - y);
  EXPECT_EQ(s * (x - y), RatFunc(1));
  // Denominator sign is normalized.
  EXPECT_EQ(RatFunc(ParamPoly(1), -v(0)), RatFunc(ParamPoly(-1), v(0)));
  std::vector<Rational> at{Rational(3), Rational(1)};
  EXPECT_EQ(s.evaluate(at), Rational(1, 2));
  std::vector<Rational> bad{Rational(2), Rational(2)};
  EXPECT_THROW(s.evaluate(bad), DomainError);
}

TEST(Poly, ExpressionsOverParameters) {
  auto sp = make_test_space({"x", "y"}, {"a", "k"});
  auto f = P(sp, "(x + a*y)^2");
  EXPECT_EQ(f, P(sp, "x^2 + 2*a*x*y + a^2*y^2"));
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(f.degree_in(1), 2);
  EXPECT_FALSE(f.is_univariate_in(0));
  EXPECT_EQ(f.substitute(1, P(sp, "k")), P(sp, "x^2 + 2*a*k*x + a^2*k^2"));
  EXPECT_EQ(P(sp, "x/2 + x/2"), P(sp, "x"));
}

TEST(UniPoly, DivisionAndGcd) {
  auto f = Q("x^4 - 1"), g = Q("x^2 + 3*x + 2");
  auto [q, r] = f.divmod(g);
  EXPECT_EQ(q * g + r, f);
  EXPECT_EQ(gcd(f, g), Q("x + 1"));
  EXPECT_EQ(squarefree_part(Q("(x - 1)^3*(x + 2)")), Q("(x - 1)*(x + 2)"));
}

TEST(Sturm, CountsRealRoots) {
  EXPECT_EQ(sturm_count(Q("x^3 - x")), 3);
  EXPECT_EQ(sturm_count(Q("x^2 + 1")), 0);
  EXPECT_EQ(sturm_count(Q("(x - 1)^2*(x + 5)")), 2);
  RootInterval positive{Rational(0), std::nullopt};
  EXPECT_EQ(sturm_count(Q("x^3 - x"), positive), 1);
  RootInterval unit{Rational(-1, 2), Rational(1, 2)};
  EXPECT_EQ(sturm_count(Q("x^3 - x"), unit), 1);
  EXPECT_THROW(sturm_count(QUniPoly()), DomainError);
}
