#include <gtest/gtest.h>

#include <cmath>

#include "jackson/lab/geometry.hpp"

using namespace jackson;
using namespace jackson::lab;

TEST(Convexity, HilbertParallelogram) {
  const auto e = estimate_convexity_constant(NormSpec::lp(2), 2.0, 7, 400);
  EXPECT_GE(e.m_hat, 0.98);
  EXPECT_LE(e.m_hat, 1.0 + 1e-9);
}

TEST(Convexity, L1WitnessIsConstantPlusCosine) {
  const auto e = estimate_convexity_constant(NormSpec::lp(1), 2.0, 7, 200);
  EXPECT_EQ(e.m_hat, 0.0);
  EXPECT_EQ(e.witness_kind, "constant_cos");
  // ||1 +- c cos||_1 = 1 = ||1||_1
  const auto B = NormSpec::lp(1);
  EXPECT_NEAR(convexity_ratio(B, e.witness_F, e.witness_G, 2.0), 0.0, 1e-12);
}

TEST(Convexity, L4PositiveWithPowerFour) {
  const auto e = estimate_convexity_constant(NormSpec::lp(4), 4.0, 3, 400);
  EXPECT_GT(e.m_hat, 0.0);
}

TEST(Convexity, AntitoneInSampleCount) {
  const auto B = NormSpec::lp(3);
  double prev = INFINITY;
  for (int trials : {100, 200, 400, 800}) {
    const auto e = estimate_convexity_constant(B, 3.0, 11, trials);
    EXPECT_LE(e.m_hat, prev);
    prev = e.m_hat;
  }
  EXPECT_THROW(estimate_convexity_constant(B, 1.5, 1, 100), std::invalid_argument);
  EXPECT_THROW(estimate_convexity_constant(B, 2.0, 1, 99), std::invalid_argument);
}

TEST(SpaceModuli, HilbertClosedForms) {
  const auto g = space_moduli(NormSpec::lp(2), 64, 5, 50);
  ASSERT_EQ(g.sigma.size(), 17u);
  EXPECT_EQ(g.eta[0], 0.0);
  EXPECT_EQ(g.delta[0], 0.0);
  for (std::size_t i = 1; i < g.sigma.size(); ++i) {
    EXPECT_NEAR(g.eta[i], std::sqrt(1 + g.sigma[i] * g.sigma[i]) - 1, 1e-9 * g.sigma[i]);
    EXPECT_NEAR(g.delta[i], 1 - std::sqrt(1 - g.eps[i] * g.eps[i] / 4), 1e-9);
    EXPECT_GE(g.eta[i], g.eta[i - 1]);
    EXPECT_GE(g.delta[i], g.delta[i - 1]);
  }
  EXPECT_NEAR(g.eta_exponent, 2.0, 0.1);
  EXPECT_NEAR(g.delta_exponent, 2.0, 0.1);
}

TEST(SpaceModuli, L4ExponentsBracketed) {
  const auto g = space_moduli(NormSpec::lp(4), 64, 5, 40);
  // L_4 is 2-smooth and 4-convex
  EXPECT_NEAR(g.eta_exponent, 2.0, 0.3);
  EXPECT_GT(g.delta_exponent, 1.7);
  EXPECT_LT(g.delta_exponent, 4.3);
}

TEST(Duality, HilbertAndL15) {
  const auto a = verify_duality(2.0, 4, 1, 400);
  EXPECT_TRUE(a.pass) << a.extras.dump();
  EXPECT_NEAR(a.extras["M_hat"].get<double>(), 1.0, 0.02);
  EXPECT_NEAR(a.extras["m_pred"].get<double>(), 1.0, 0.02);
  const auto b = verify_duality(1.5, 8, 2, 400);
  EXPECT_TRUE(b.pass) << b.extras.dump();
  EXPECT_DOUBLE_EQ(b.params["s"].get<double>(), 3.0);
}

TEST(Duality, RejectsPowerTypeAboveTwo) {
  try {
    verify_duality(2.5, 4, 1, 100);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("q > 2"), std::string::npos);
  }
  EXPECT_THROW(verify_duality(1.5, 1, 1, 100), std::invalid_argument);
}
