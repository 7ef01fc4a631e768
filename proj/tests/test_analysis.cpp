#include <gtest/gtest.h>

#include <cmath>

#include "ppt/analysis/order_scan.hpp"
#include "ppt/analysis/radius.hpp"
#include "ppt/analysis/structure.hpp"
#include "ppt/analysis/tail.hpp"
#include "ppt/series/solve_tau.hpp"
#include "support.hpp"

using namespace ppt;
using namespace ppt::analysis;
using testing_support::poly;

TEST(GammaEstimate, DirectEvaluation) {
  // eps = 0, mu = 0: Gamma(n) Gamma(n + 1/2) / (n! Gamma(n + 1))
  const int n = 5;
  const double direct = std::tgamma(n) * std::tgamma(n + 0.5) / (std::tgamma(n + 1.0) * std::tgamma(n + 1.0));
  EXPECT_NEAR(gamma_estimate(n, 0.0, 0.0), direct, 1e-13 * direct);
  EXPECT_THROW(gamma_estimate(0, 0.0, 0.0), domain_error);
  EXPECT_THROW(gamma_estimate(2, -3.0, 1.0), domain_error);
}

TEST(GammaEstimate, ThreeHalvesScaling) {
  const double c1 = gamma_estimate(10000, 0.0, 2.0) * std::pow(10000.0, 1.5);
  const double c2 = gamma_estimate(100000, 0.0, 2.0) * std::pow(100000.0, 1.5);
  EXPECT_NEAR(c1 / c2, 1.0, 1e-3);
}

TEST(GammaEstimate, ConsecutiveRatio) {
  for (double eps : {0.0, 0.3}) {
    for (int n : {50, 200, 1000}) {
      const double ratio = gamma_estimate(n + 2, eps, 2.0) / gamma_estimate(n + 1, eps, 2.0);
      EXPECT_NEAR(ratio, two_term_factor(n, eps, 2.0), 5.0 / n);
    }
  }
}

TEST(TailFit, Exponent) {
  const double e = tail_fit(0.0, 2.0, 1000, 10000);
  EXPECT_GE(e, -1.6);
  EXPECT_LE(e, -1.4);
  const double e2 = tail_fit(0.3, 1.5, 1000, 10000);
  EXPECT_GE(e2, -1.6);
  EXPECT_LE(e2, -1.4);
  EXPECT_NEAR(tail_fit(0.0, 2.0, 1000, 10000, 1e-3), e, 0.02);
  EXPECT_THROW(tail_fit(0.0, 2.0, 1000, 5000), domain_error);
  EXPECT_THROW(tail_fit(0.0, 2.0, 5, 100), domain_error);
}

TEST(TailFit, ParameterGrid) {
  for (double mu : {0.5, 2.0, 4.5}) {
    for (double frac : {0.1, 0.5, 0.9}) {
      // eps spread over (-(mu + 3)/2, 1]
      const double lo = -(mu + 3.0) / 2.0;
      const double eps = lo + frac * (1.0 - lo);
      const double e = tail_fit(eps, mu, 1000, 10000);
      EXPECT_GE(e, -1.6) << mu << " " << eps;
      EXPECT_LE(e, -1.4) << mu << " " << eps;
    }
  }
}

class Structure : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { tau_ = new SymbolicTau(solve_tau_symbolic(7)); }
  static void TearDownTestSuite() { delete tau_; }
  static const RationalFunction& moment(int k) { return tau_->moment(k); }
  static SymbolicTau* tau_;
};
SymbolicTau* Structure::tau_ = nullptr;

TEST_F(Structure, OrderTwo) {
  const auto r = structure_check(moment(2), 2);
  EXPECT_TRUE(r.matches_ansatz());
  EXPECT_EQ(r.prefactor_pow2, 5);
  EXPECT_EQ(to_rational(r.numerator_extra), poly({1, 3, 8, 8}));
  EXPECT_EQ(r.exponent("a"), 3);
  EXPECT_EQ(r.exponent("(1+2a)"), 3);
  EXPECT_EQ(r.exponent("(a+1)"), 1);
}

TEST_F(Structure, OrderThree) {
  EXPECT_EQ(moment(3), testing_support::reference_tau3());
  const auto r = structure_check(moment(3), 3);
  EXPECT_TRUE(r.matches_ansatz());
  EXPECT_EQ(r.prefactor_pow2, 7);
  EXPECT_EQ(r.degree_L, 7);
  EXPECT_EQ(to_rational(r.numerator_extra), testing_support::d7());
  EXPECT_EQ(r.exponent("a"), 5);
  EXPECT_EQ(r.exponent("(1+2a)"), 5);
  EXPECT_EQ(r.exponent("(a+1)"), 2);
  EXPECT_EQ(r.exponent("(a+3/2)"), 1);
}

TEST_F(Structure, OrderFour) {
  EXPECT_EQ(moment(4), testing_support::reference_tau4());
  const auto r = structure_check(moment(4), 4);
  EXPECT_TRUE(r.matches_ansatz());
  EXPECT_EQ(r.prefactor_pow2, 11);
  EXPECT_EQ(r.degree_L, 12);
  EXPECT_EQ(r.numerator_extra[0], 90);
}

TEST_F(Structure, OrderFive) {
  const auto r = structure_check(moment(5), 5);
  EXPECT_TRUE(r.matches_ansatz());
  EXPECT_EQ(r.prefactor_pow2, 13);
  EXPECT_EQ(r.degree_L, 18);
  EXPECT_EQ(r.numerator_extra[0], 3780);
  EXPECT_EQ(r.numerator_extra[1], 80892);
  EXPECT_EQ(r.numerator_extra[2], 794817);
  EXPECT_EQ(r.numerator_extra[18], 458752);
  EXPECT_EQ(r.exponent("(a+5/2)"), 1);
}

TEST_F(Structure, HigherOrdersKeepPattern) {
  for (int k = 6; k <= 7; ++k) {
    const auto r = structure_check(moment(k), k);
    EXPECT_TRUE(r.numerator_divisible) << k;
    EXPECT_TRUE(r.denominator_pattern) << k;
    EXPECT_TRUE(r.degree_law) << k;
  }
}

TEST_F(Structure, MismatchIsReported) {
  const auto r = structure_check(moment(3), 4);
  EXPECT_FALSE(r.matches_ansatz());
  EXPECT_FALSE(r.denominator_pattern);
  const auto q = structure_check(RationalFunction(poly({1, 1}), poly({0, 1})), 2);
  EXPECT_FALSE(q.numerator_divisible);
  EXPECT_THROW(structure_check(moment(1), 1), domain_error);
}

TEST(Radius, GeometricSelfTest) {
  std::vector<Rational> t;
  for (int k = 0; k <= 12; ++k) t.push_back(pow(Rational(2), k));
  for (auto m : {RadiusMethod::ratio, RadiusMethod::root}) {
    const auto r = radius_sequence(t, m);
    EXPECT_NEAR(r.last(), 0.5, 1e-15);
    EXPECT_TRUE(r.skipped.empty());
  }
}

TEST(Radius, ZeroCoefficientSkipped) {
  const std::vector<Rational> t{Rational(1), Rational(0), Rational(4), Rational(8)};
  const auto r = radius_sequence(t, RadiusMethod::ratio);
  EXPECT_EQ(r.skipped, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.orders, (std::vector<int>{3}));
}

TEST(Radius, TauSequences) {
  const auto t54 = solve_tau_numeric(Rational(5, 4), 8);
  const auto t1 = solve_tau_numeric(Rational(1), 8);
  for (auto m : {RadiusMethod::ratio, RadiusMethod::root}) {
    const auto r = radius_estimate(t54, m);
    ASSERT_FALSE(r.empty());
    for (double e : r.estimates) {
      EXPECT_GT(e, 0.0);
      EXPECT_LT(e, 1e3);
    }
    EXPECT_NE(radius_estimate(t1, m).last(), r.last());
  }
  EXPECT_THROW(radius_estimate(solve_tau_numeric(Rational(5, 4), 5), RadiusMethod::root), domain_error);
}

TEST(OrderScan, RatioAndZeroRow) {
  const auto s = order_error_scan(Rational(2), {Rational(0), Rational(1, 100), Rational(1, 200)}, 5);
  EXPECT_LE(s.rows[0].abs_delta, 1e-9);
  const double ratio = s.ratio(Rational(1, 100), Rational(1, 200));
  EXPECT_GE(ratio, 32.0);
  EXPECT_LE(ratio, 128.0);
  EXPECT_THROW(order_error_scan(Rational(2), {Rational(1, 10)}, 5), domain_error);
}

TEST(OrderScan, SlopeTracksOrder) {
  const std::vector<Rational> lambdas{Rational(1, 50), Rational(1, 100), Rational(1, 200), Rational(1, 400)};
  for (int K : {1, 3, 5}) {
    const auto s = order_error_scan(Rational(2), lambdas, K);
    ASSERT_TRUE(s.slope_valid);
    EXPECT_GE(s.slope, K + 0.5) << K;
    EXPECT_LE(s.slope, K + 1.5) << K;
  }
}
