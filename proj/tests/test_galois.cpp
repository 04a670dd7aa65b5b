#include <gtest/gtest.h>

#include "support.hpp"

using namespace qssa;
using namespace qssa::testing;

TEST(Groups, OrdersOfTransitiveGroups) {
  std::vector<std::pair<std::string, std::size_t>> deg4{{"C4", 4}, {"V4", 4}, {"D4-order8", 8}, {"A4", 12}, {"S4", 24}};
  for (auto& [name, order] : deg4) EXPECT_EQ(find_group(4, name)->order, order) << name;
  EXPECT_EQ(transitive_groups(5).size(), 5u);
  EXPECT_EQ(transitive_groups(6).size(), 16u);
  EXPECT_EQ(transitive_groups(7).size(), 7u);
  EXPECT_EQ(find_group(6, "S4xC2")->order, 48u);
  EXPECT_EQ(find_group(6, "S4xZ2")->name, "S4xC2");
  EXPECT_EQ(find_group(4, "D8")->name, "D4-order8");
  EXPECT_EQ(find_group(7, "PSL(3,2)")->order, 168u);
  EXPECT_EQ(find_group(8, "AGL(3,2)")->order, 1344u);
  EXPECT_EQ(find_group(8, "PGL(2,7)")->order, 336u);
  EXPECT_EQ(find_group(8, "S4wrC2")->order, 1152u);
  EXPECT_EQ(find_group(8, "S8")->order, 40320u);
  EXPECT_EQ(find_group(5, "nonsense"), nullptr);
}

TEST(Groups, CycleTypeClasses) {
  auto* d8 = find_group(4, "D4-order8");
  std::set<CycleType> types;
  for (auto& [t, k] : d8->cycle_types) types.insert(t);
  EXPECT_EQ(types, (std::set<CycleType>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {4}}));
  std::size_t total = 0;
  for (auto& [t, k] : find_group(6, "S4xC2")->cycle_types) total += k;
  EXPECT_EQ(total, 48u);
  EXPECT_FALSE(find_group(5, "A5")->solvable);
  EXPECT_TRUE(find_group(5, "F20")->solvable);
  EXPECT_EQ(cycle_type(Perm{1, 2, 0, 4, 3}), (CycleType{3, 2}));
}

TEST(Dedekind, QuadraticResidues) {
  auto ws = dedekind_sample(Q("x^2 - 2"), 2);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].prime, 5u);
  EXPECT_EQ(ws[0].cycle_type, (CycleType{2}));
  EXPECT_EQ(ws[1].prime, 7u);
  EXPECT_EQ(ws[1].cycle_type, (CycleType{1, 1}));
  EXPECT_THROW(dedekind_sample(Q("x^2 - 1")), DomainError);
}

TEST(Dedekind, SkipsPrimesDividingTheDiscriminant) {
  // disc(x^2 - 5) = 20; 5 must be skipped.
  EXPECT_EQ(dedekind_sample(Q("x^2 - 5"), 1)[0].prime, 7u);
  // lc = 7 makes 7 unusable.
  EXPECT_EQ(dedekind_sample(Q("7*x^2 - 3"), 2)[1].prime, 11u);
}

TEST(Classify, DegreeAtMostFour) {
  EXPECT_EQ(classify_deg_le_4(Q("x^2 - 2")).label, "C2");
  EXPECT_EQ(classify_deg_le_4(Q("x^3 - 2")).label, "S3");
  EXPECT_EQ(classify_deg_le_4(Q("x^3 - 3*x + 1")).label, "C3");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 + 1")).label, "V4");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 - 2")).label, "D4-order8");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 - 2")).alt_label, "D8");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 + x^3 + x^2 + x + 1")).label, "C4");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 + x + 1")).label, "S4");
  EXPECT_EQ(classify_deg_le_4(Q("x^4 + 8*x + 12")).label, "A4");
  EXPECT_THROW(classify_deg_le_4(Q("x^2 - 1")), DomainError);
}

TEST(Classify, Discriminants) {
  EXPECT_EQ(discriminant(Q("x^3 - 3*x + 1")), Rational(81));
  EXPECT_EQ(discriminant(Q("x^2 + 3*x + 1")), Rational(5));
  EXPECT_EQ(discriminant(Q("x^4 + x + 1")), Rational(229));
}

TEST(Insolvable, QuinticWithTransposition) {
  auto c = certify_insolvable(Q("x^5 - x - 1"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->group, "S5");
  EXPECT_EQ(c->route, "transposition");
  EXPECT_TRUE(c->verified);
  EXPECT_GE(c->witnesses.size(), 2u);
  EXPECT_TRUE(detail::gives_transposition(c->generator.cycle_type));
}

TEST(Insolvable, SolvableQuinticIsNotCertified) {
  EXPECT_FALSE(certify_insolvable(Q("x^5 - 2")).has_value());
  auto m = best_match(5, tally(dedekind_sample(Q("x^5 - 2"), 200)));
  ASSERT_NE(m.group, nullptr);
  EXPECT_EQ(m.group->name, "F20");
}

TEST(Insolvable, AlternatingQuinticIsEvidenceOnly) {
  // Galois group A5: no transposition and no small prime cycle.
  auto f = Q("x^5 + 20*x + 16");
  EXPECT_FALSE(certify_insolvable(f).has_value());
  auto m = best_match(5, tally(dedekind_sample(f, 200)));
  ASSERT_NE(m.group, nullptr);
  EXPECT_EQ(m.group->name, "A5");
}

TEST(Specialization, DeterministicPerSeed) {
  std::vector<std::string> syms{"a", "b", "c"};
  auto s1 = sample_specialization(syms, 42, 100), s2 = sample_specialization(syms, 42, 100);
  EXPECT_EQ(s1.values, s2.values);
  for (auto& v : s1.values) {
    EXPECT_GT(v, 0);
    EXPECT_LE(v, 100);
  }
  EXPECT_NE(to_string(sample_specialization(syms, 43, 100)), to_string(s1));
}

TEST(Specialization, AvoidsDegreeDrop) {
  auto sp = make_test_space({"x"}, {"a", "b"});
  auto f = U(sp, 0, "(a - b)*x^2 + x + 1");
  auto [g, s] = specialize_generic(f, sp->params, 7, 3);
  EXPECT_EQ(g.degree(), 2);
}

TEST(Verdict, SolvableByDegree) {
  auto I = network_ideal("example1");
  auto e = eliminate(as_ideal(I), 0);
  auto v = solvability_verdict(*e.poly, I.space->params);
  EXPECT_EQ(v.status, SolvabilityStatus::SolvableCertified);
  ASSERT_TRUE(v.group_label.has_value());
  EXPECT_EQ(*v.group_label, "D4-order8");
  EXPECT_EQ(v.seeds.size(), 3u);
}
