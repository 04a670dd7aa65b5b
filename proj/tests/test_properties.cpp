#include <gtest/gtest.h>

#include "properties.hpp"

using namespace qssa::testing;

namespace {

void expect_ok(const PropertyResult& r, int cases) {
  EXPECT_EQ(r.cases, cases);
  for (auto& f : r.failures) ADD_FAILURE() << f;
}

}  // namespace

TEST(Property, BuchbergerCriterion) { expect_ok(buchberger_property(100), 100); }
TEST(Property, SaturationChain) { expect_ok(saturation_chain_property(40), 40); }
TEST(Property, BezoutGuard) { expect_ok(bezout_property(100), 100); }
TEST(Property, FactorRoundTrip) { expect_ok(factor_roundtrip_property(100), 100); }
TEST(Property, SturmAgainstGrid) { expect_ok(sturm_property(100), 100); }
