#include <gtest/gtest.h>

#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

TEST(Groebner, CircleAndLine) {
  auto sp = make_test_space({"x", "y"}, {});
  auto G = buchberger<RatFunc>({P(sp, "x^2 + y^2 - 1"), P(sp, "x - y")}, MonomialOrder::identity(2));
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], P(sp, "x - y"));
  EXPECT_EQ(G.elements[1], P(sp, "y^2 - 1/2"));
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  EXPECT_TRUE(basis_is_zero_dimensional(G));
}

TEST(Groebner, ParametricReducedBasis) {
  auto sp = make_test_space({"x", "y"}, {"a", "b"});
  auto G = buchberger<RatFunc>({P(sp, "a*x*y - b"), P(sp, "x - y")}, MonomialOrder::identity(2));
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], P(sp, "x - y"));
  EXPECT_EQ(G.elements[1], P(sp, "y^2 - b/a"));
}

TEST(Groebner, UnitIdeal) {
  auto sp = make_test_space({"x", "y"}, {"a"});
  auto G = buchberger<RatFunc>({P(sp, "x*y - a"), P(sp, "x"), P(sp, "y - 1")}, MonomialOrder::identity(2));
  EXPECT_TRUE(G.is_unit());
}

TEST(Groebner, NormalFormAndMembership) {
  auto sp = make_test_space({"x", "y"}, {"a"});
  std::vector<IntermediatePoly> basis{P(sp, "x - a*y"), P(sp, "y^2 - a")};
  auto ord = MonomialOrder::identity(2);
  EXPECT_EQ(normal_form(P(sp, "x^2"), basis, ord), P(sp, "a^3"));
  EXPECT_TRUE(reduces_to_zero(P(sp, "x^2 - a^3"), basis, ord));
  EXPECT_FALSE(reduces_to_zero(P(sp, "x"), basis, ord));
  EXPECT_TRUE(ideals_equal(basis, {P(sp, "x - a*y"), P(sp, "x^2 - a^3")}, 2));
}

TEST(Eliminate, MichaelisMenten) {
  auto I = network_ideal("michaelis_menten");
  auto e = eliminate(as_ideal(I), 0);
  ASSERT_TRUE(e.poly.has_value());
  EXPECT_EQ(*e.poly, U(I.space, 0, "x_E.S - k1*c_E*c_S/(k_1 + k2)"));
}

// Reference eliminants computed independently with a general-purpose CAS.
TEST(Eliminate, PrintedExampleMatchesReference) {
  auto I = network_ideal("example1_printed");
  auto J = as_ideal(I);
  auto ex = eliminate(J, 0), ey = eliminate(J, 1);
  ASSERT_TRUE(ex.poly && ey.poly);
  EXPECT_EQ(*ex.poly, U(I.space, 0, "x_X^4 - c_A*k1/(4*k2)*x_X^2 - c_A^2*k1^2*k_2/(4*k2*k3^2)"));
  EXPECT_EQ(*ey.poly, U(I.space, 1, "x_Y^4 + c_A*k1/(4*k_2)*x_Y^2 - c_A^2*k1^2*k2/(4*k3^2*k_2)"));
  EXPECT_TRUE(satisfies_buchberger_criterion(ex.basis));
}

TEST(Eliminate, DoubledConstantTermVariant) {
  auto I = network_ideal("example1");
  auto J = as_ideal(I);
  EXPECT_EQ(*eliminate(J, 0).poly, U(I.space, 0, "x_X^4 - c_A*k1/(2*k2)*x_X^2 - c_A^2*k1^2*k_2/(k2*k3^2)"));
  EXPECT_EQ(*eliminate(J, 1).poly, U(I.space, 1, "x_Y^4 + c_A*k1/(2*k_2)*x_Y^2 - c_A^2*k1^2*k2/(k3^2*k_2)"));
}

TEST(ZeroDim, PositiveDimensionalBoundaryExample) {
  auto I = network_ideal("boundary_fail");
  auto z = is_zero_dimensional(as_ideal(I));
  EXPECT_FALSE(z.zero_dimensional);
  EXPECT_FALSE(z.witnesses[1].has_value());  // no univariate polynomial in y
  auto strata = boundary_strata(as_ideal(I));
  ASSERT_EQ(strata.size(), 7u);
  // Singletons come first: x = 0, y = 0, z = 0.
  EXPECT_EQ(strata[2].zeroed, (std::vector<std::size_t>{2}));
  EXPECT_EQ(strata[2].kind, StratumKind::PositiveDimensional);
  EXPECT_EQ(strata[1].kind, StratumKind::ZeroDimensional);
}

TEST(Saturation, RemovesBoundaryComponent) {
  auto sp = make_test_space({"x", "y"}, {"a"});
  Ideal<RatFunc> I{sp, {P(sp, "x*(y - a)"), P(sp, "x*(x - 1)")}};
  auto S = saturate(I, P(sp, "x"));
  auto G = buchberger(S.gens, MonomialOrder::identity(2));
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], P(sp, "x - 1"));
  EXPECT_EQ(G.elements[1], P(sp, "y - a"));
  auto Q = ideal_quotient(I, P(sp, "x"));
  EXPECT_TRUE(ideals_equal(Q.gens, {P(sp, "y - a"), P(sp, "x - 1")}, 2));
  auto V = saturate_by_variables(I);
  EXPECT_TRUE(ideals_equal(V.gens, S.gens, 2));
}

TEST(Saturation, ModifiedPanteaDropsBoundaryRoots) {
  auto I = network_ideal("pantea_modified");
  auto S = saturate_by_variables(as_ideal(I));
  EXPECT_TRUE(ideals_equal(S.gens, saturate(as_ideal(I), product_of_variables(as_ideal(I))).gens, 3));
  for (std::size_t v = 0; v < 3; ++v) {
    auto before = eliminate(as_ideal(I), v).poly, after = eliminate(S, v).poly;
    ASSERT_TRUE(before && after);
    EXPECT_EQ(before->degree(), v == 1 ? 8 : 4);
    EXPECT_EQ(after->degree(), v == 1 ? 6 : 3);
  }
}

TEST(Budget, StepCapStopsBuchberger) {
  auto I = network_ideal("pantea");
  Budget tight(0, 50);
  EXPECT_THROW(buchberger(I.generators, MonomialOrder::identity(3), tight), ResourceLimit);
}
