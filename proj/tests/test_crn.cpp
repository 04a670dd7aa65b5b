#include <gtest/gtest.h>

#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

TEST(Parse, MichaelisMenten) {
  auto p = load_network("michaelis_menten");
  EXPECT_EQ(p.crn.species, (std::vector<std::string>{"E", "S", "E.S", "P"}));
  ASSERT_EQ(p.crn.reactions.size(), 3u);
  EXPECT_EQ(p.crn.reactions[1].rate, "k_1");
  EXPECT_EQ(p.intermediates, (IntermediateSet{2}));
  EXPECT_TRUE(validate_intermediates(p.crn, p.intermediates).empty());
}

TEST(Parse, MiddleDotAndAutoNames) {
  auto p = parse_crn("E + S <-> E\xC2\xB7S\nE\xC2\xB7S -> E + P\n2 A -> 0 @ k1\n");
  EXPECT_EQ(p.crn.species[2], "E.S");
  // Unnamed reactions skip names already taken.
  EXPECT_EQ(p.crn.reactions[0].rate, "k2");
  EXPECT_EQ(p.crn.reactions[1].rate, "k3");
  EXPECT_EQ(p.crn.reactions[2].rate, "k4");
  EXPECT_EQ(p.crn.reactions[3].rate, "k1");
  EXPECT_TRUE(p.crn.reactions[3].products.empty());
  auto round = parse_crn(print_crn(p.crn));
  EXPECT_EQ(round.crn, p.crn);
}

TEST(Parse, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_crn(text);
    } catch (const ParseError& e) {
      return static_cast<int>(e.line());
    }
    return -1;
  };
  EXPECT_EQ(line_of("A -> B\nA => B\n"), 2);
  EXPECT_EQ(line_of("A -> A\n"), 1);
  EXPECT_EQ(line_of("A -> B @ k1\nB -> C @ k1\n"), 2);
  EXPECT_EQ(line_of("A -> B @ k1, k2\n"), 1);
  EXPECT_EQ(line_of("species: A\nA -> B\n"), 2);
  EXPECT_EQ(line_of("A -> B\nintermediates: C\n"), 2);
  EXPECT_EQ(line_of("# nothing\n"), 1);
}

TEST(Parse, IntermediateWarnings) {
  auto p = parse_crn("A -> X\nintermediates: X\n");
  auto w = validate_intermediates(p.crn, p.intermediates);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], "X never consumed");
}

TEST(RateLaw, MichaelisMenten) {
  auto p = load_network("michaelis_menten");
  IntermediateSet all{0, 1, 2, 3};
  auto sp = make_space(p.crn, all, 0);
  EXPECT_EQ(rate_law(p.crn, 0, all, sp), P(sp, "-k1*x_E*x_S + k_1*x_E.S + k2*x_E.S"));
  EXPECT_EQ(rate_law(p.crn, 1, all, sp), P(sp, "-k1*x_E*x_S + k_1*x_E.S"));
  EXPECT_EQ(rate_law(p.crn, 2, all, sp), P(sp, "k1*x_E*x_S - k_1*x_E.S - k2*x_E.S"));
  EXPECT_EQ(rate_law(p.crn, 3, all, sp), P(sp, "k2*x_E.S"));
}

TEST(RateLaw, PrintedExampleIdeal) {
  auto I = network_ideal("example1_printed");
  auto sp = I.space;
  EXPECT_EQ(sp->vars, (std::vector<std::string>{"x_X", "x_Y"}));
  EXPECT_EQ(sp->params, (std::vector<std::string>{"k1", "k2", "k_2", "k3", "c_A", "c_B"}));
  ASSERT_EQ(I.generators.size(), 2u);
  EXPECT_EQ(I.generators[0], P(sp, "-2*k2*x_X^2 - k3*x_X*x_Y + 2*k_2*x_Y^2 + k1*c_A"));
  EXPECT_EQ(I.generators[1], P(sp, "-2*k_2*x_Y^2 - k3*x_X*x_Y + 2*k2*x_X^2"));
  EXPECT_TRUE(I.lcls.empty());
  EXPECT_TRUE(I.restricted_bimolecular);
}

TEST(RateLaw, ModifiedPanteaRateLaws) {
  auto I = network_ideal("pantea_modified");
  auto sp = I.space;
  EXPECT_EQ(I.generators[0], P(sp, "-2*k_3*x_X^2 - k4*c_A*x_X + 2*k3*c_B*x_Z"));
  EXPECT_EQ(I.generators[1], P(sp, "-2*k1*x_Y^2 - k2*c_B*x_Y + 2*k_1*c_B^2 + k4*c_A*x_X"));
  EXPECT_EQ(I.generators[2], P(sp, "-2*k5*x_Z^2 - k3*c_B*x_Z + k_3*x_X^2"));
}

TEST(Lcl, MichaelisMentenAllSpecies) {
  auto p = load_network("michaelis_menten");
  auto ls = find_lcls_all_species(p.crn);
  ASSERT_EQ(ls.size(), 2u);
  // Free enzyme plus complex, and its difference with substrate plus
  // complex plus product.
  EXPECT_EQ(ls[0].coeffs, (std::vector<Rational>{1, 0, 1, 0}));
  EXPECT_EQ(ls[1].coeffs, (std::vector<Rational>{1, -1, 0, -1}));
  EXPECT_TRUE(find_lcls(p.crn, p.intermediates).empty());
}

TEST(Lcl, AmongIntermediatesEntersIdeal) {
  auto p = parse_crn("A + X -> Y @ k1\nY -> B + X @ k2\nintermediates: X, Y\n");
  auto I = build_qssa_ideal(p.crn, p.intermediates);
  ASSERT_EQ(I.lcls.size(), 1u);
  EXPECT_EQ(I.inventory.lcl_constants, (std::vector<std::string>{"T1"}));
  ASSERT_EQ(I.generators.size(), 3u);
  EXPECT_EQ(I.generators[2], P(I.space, "x_X + x_Y - T1"));
  EXPECT_EQ(I.generators[0], P(I.space, "-k1*c_A*x_X + k2*x_Y"));
}

TEST(Lcl, ProportionalityDiagnostic) {
  auto sp = make_test_space({"x", "y"}, {"a"});
  auto d = proportionality_diagnostic(P(sp, "2*a*x - 4*y"), P(sp, "a*x - 2*y"));
  ASSERT_TRUE(d.alpha.has_value());
  EXPECT_EQ(*d.alpha, Rational(2));
  EXPECT_FALSE(proportionality_diagnostic(P(sp, "a*x - y"), P(sp, "a*x + y")).alpha.has_value());
}

TEST(Hypotheses, TwoIntermediateExample) {
  auto h = hypotheses_finitethm(network_ideal("example1"));
  EXPECT_TRUE(h.theorem_holds());
  EXPECT_TRUE(h.strengthened_holds());
  EXPECT_EQ(h.constant_term_in, "x_X");

  auto p = parse_crn("X -> Y @ k1\nY -> X @ k2\nintermediates: X, Y\n");
  auto g = hypotheses_finitethm(build_qssa_ideal(p.crn, p.intermediates));
  EXPECT_FALSE(g.constant_term);
  EXPECT_THROW(hypotheses_finitethm(network_ideal("pantea")), DomainError);
}
