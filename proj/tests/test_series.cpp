#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ppt/series/elements.hpp"
#include "ppt/series/energy.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/recurrence.hpp"
#include "ppt/series/solve_tau.hpp"
#include "ppt/series/wave.hpp"
#include "support.hpp"

using namespace ppt;
using RSeries = TruncatedSeries<Rational>;

TEST(Model, StrengthParam) {
  EXPECT_EQ(strength_param(Rational(2)), Rational(5, 4));
  EXPECT_EQ(strength_param(Rational(3, 2)), Rational(1));
  EXPECT_THROW(strength_param(Rational(0)), domain_error);
  EXPECT_EQ(mu_from_strength(Rational(5, 4)), Rational(2));
}

TEST(Elements, Alpha) {
  const Rational a(5, 4);
  EXPECT_EQ(alpha_elem(1, RSeries::constant(a, 0))[0], Rational(-1, 2) - Rational(2) * a);
  // -2(mu + 2) at mu = 2
  EXPECT_EQ(alpha_elem(2, RSeries::constant(a, 0))[0], Rational(-8));
  const Rational b(-12, 35);
  const RSeries t(std::vector<Rational>{a, b});
  const RSeries al = alpha_elem(1, t);
  EXPECT_EQ(al[0], Rational(-1, 2) - Rational(2) * a);
  EXPECT_EQ(al[1], Rational(-2) * b);
  EXPECT_THROW(alpha_elem(0, t), domain_error);
}

TEST(Elements, Beta) {
  const Rational a(5, 4), b(-12, 35);
  const RSeries t(std::vector<Rational>{a, b, 0});
  const RSeries b0 = beta0_elem(t);
  EXPECT_TRUE(b0[0].is_zero());
  EXPECT_EQ(b0[1], Rational(2) * a * b);
  EXPECT_EQ(b0[2], b * b);
  EXPECT_TRUE(beta0_elem(RSeries::constant(a, 0))[0].is_zero());
}

TEST(Elements, BetaZeroIdentity) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Rational mu = testing_support::random_positive(rng), eps = testing_support::random_rational(rng);
    const Rational a = strength_param(mu);
    EXPECT_EQ(beta_value(0, a + eps, a), eps * (eps + mu + Rational(1, 2)));
  }
}

TEST(Elements, TwoTermRowIdentities) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const Rational mu = testing_support::random_positive(rng), eps = testing_support::random_rational(rng);
    const Rational a = strength_param(mu), tau = a + eps;
    for (int n = 0; n < 6; ++n) {
      const Rational nn(n);
      EXPECT_EQ(-alpha_value(n + 2, tau), (nn + 2) * (Rational(2) * eps + nn + mu + 2));
      EXPECT_EQ(beta_value(n + 1, tau, a), (eps + nn + 1) * (eps + nn + mu + Rational(3, 2)));
    }
  }
}

TEST(SolveTau, SymbolicLowOrders) {
  const SymbolicTau t = solve_tau_symbolic(2);
  EXPECT_EQ(t.moment(0), RationalFunction::variable());
  EXPECT_EQ(t.moment(1), testing_support::reference_tau1());
  EXPECT_EQ(t.moment(2), testing_support::reference_tau2());
}

TEST(SolveTau, NumericFirstMoment) {
  EXPECT_EQ(solve_tau_numeric(Rational(5, 4), 1).moment(1), Rational(-12, 35));
  EXPECT_THROW(solve_tau_numeric(Rational(0), 1), domain_error);
}

TEST(SolveTau, FirstStageCondition) {
  // lambda^0 part of B_1 is 2a + 1/2 + 2 a b (1 + 2a), affine in b
  std::vector<GammaStage<RationalFunction>> trace;
  solve_tau(RationalFunction::variable(), 1, {}, &trace);
  const RationalFunction a = RationalFunction::variable();
  EXPECT_EQ(trace.at(0).condition.constant(), RationalFunction(2) * a + RationalFunction(Rational(1, 2)));
  EXPECT_EQ(trace.at(0).condition.slope(), RationalFunction(2) * a * (RationalFunction(1) + RationalFunction(2) * a));
}

TEST(SolveTau, FirstLineRuleHoldsAtEveryStage) {
  std::vector<GammaStage<Rational>> trace;
  const NumericTau t = solve_tau(Rational(5, 4), 7, {}, &trace);
  ASSERT_EQ(trace.size(), 7u);
  for (const auto& s : trace) EXPECT_TRUE(s.bhat[0].is_zero()) << "stage " << s.j;
  const auto chain = gamma_chain(t);
  EXPECT_TRUE(chain.last_bhat[0].is_zero());
}

TEST(SolveTau, SymbolicNumericAgreement) {
  const SymbolicTau sym = solve_tau_symbolic(4);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    const Rational a0 = testing_support::random_positive(rng);
    const NumericTau num = solve_tau_numeric(a0, 4);
    EXPECT_EQ(substitute(sym, a0).coefficients, num.coefficients) << a0;
  }
}

TEST(SolveTau, FirstMomentNegative) {
  const RationalFunction t1 = solve_tau_symbolic(1).moment(1);
  for (int k = 1; k <= 40; ++k) EXPECT_LT(t1.evaluate(Rational(k, 8)).sign(), 0);
}

TEST(SolveTau, OrderGuard) {
  EXPECT_THROW(solve_tau_symbolic(9), order_guard_exceeded);
  EXPECT_THROW(solve_tau_numeric(Rational(1), 31), order_guard_exceeded);
  SolveOptions o;
  o.max_symbolic_order = 1;
  EXPECT_THROW(solve_tau_symbolic(2, o), order_guard_exceeded);
}

TEST(Wave, LeadingTerms) {
  const NumericTau t = solve_tau_numeric(Rational(5, 4), 5);
  const auto w = wave_coefficients(t, 8);
  EXPECT_EQ(w.f[0], RSeries::constant(Rational(1), 5));
  const Rational a = t.a(), b = t.moment(1);
  EXPECT_EQ(w.f[1][0], Rational(2) * a * b / (Rational(1, 2) + Rational(2) * a));
  for (int j = 1; j <= 4; ++j) EXPECT_FALSE(w.f[j][0].is_zero()) << j;
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(w.f[j].order(), static_cast<std::size_t>(5 - j));
  EXPECT_FALSE(w.truncated[5]);
  EXPECT_TRUE(w.truncated[6]);
  EXPECT_TRUE(w.truncated[8]);
  EXPECT_THROW(wave_coefficients(solve_tau_numeric(a, 0), 3), domain_error);
}

TEST(Recurrence, FirstCoefficientAndUnperturbed) {
  ModelParams p;
  p.lambda = Rational(1, 100);
  const Rational eps(1, 1000), a = strength_param(p.mu);
  const auto c = raw_recurrence(p, eps, 3);
  EXPECT_EQ(c[1], -beta_value(0, a + eps, a) / alpha_value(1, a + eps));
  p.lambda = Rational(0);
  const auto c0 = raw_recurrence(p, Rational(0), 6);
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(c0[n].is_zero());
}

TEST(Recurrence, TerminationBound) {
  ModelParams p;
  p.lambda = Rational(1, 100);
  const NumericTau t = solve_tau_numeric(strength_param(p.mu), 5);
  const Rational eps = t.epsilon().evaluate(p.lambda);
  const auto c = raw_recurrence(p, eps, 4);
  const auto w = wave_coefficients(t, 4);
  for (int n = 1; n <= 4; ++n)
    EXPECT_LE(abs(c[n]), Rational(2) * pow(p.lambda, n) * abs(w.f[n][0])) << n;
}

TEST(Recurrence, DeterminantMinors) {
  ModelParams p;
  const Rational eps(1, 1000);
  EXPECT_EQ(det_coefficient(0, p, eps), eps * (eps + p.mu + Rational(1, 2)));
  for (int n = 0; n <= 5; ++n) EXPECT_TRUE(det_coefficient(n, p, Rational(0)).is_zero());
  p.lambda = Rational(1, 100);
  const auto c = raw_recurrence(p, eps, 8);
  const Rational a = strength_param(p.mu);
  for (int n = 1; n <= 6; ++n) {
    // D_n / D_{n-1} = -alpha_{n+1} c_{n+1} / c_n
    EXPECT_EQ(det_coefficient(n, p, eps) / det_coefficient(n - 1, p, eps),
              -alpha_value(n + 1, a + eps) * c[n + 1] / c[n]);
  }
}

TEST(Recurrence, MinorSeriesReproduceWaveCoefficients) {
  const NumericTau t = solve_tau_numeric(Rational(5, 4), 5);
  const auto d = det_series(t, 4);
  const auto w = wave_coefficients(t, 5);
  for (int n = 1; n <= 5; ++n) {
    const RSeries c = coefficient_from_minor(t, n - 1, d[n - 1]);
    for (int k = 0; k < n; ++k) EXPECT_TRUE(c[k].is_zero());
    for (std::size_t k = 0; k <= w.f[n].order(); ++k) EXPECT_EQ(c[n + k], w.f[n][k]) << n << " " << k;
  }
}

TEST(Energy, Unperturbed) {
  ModelParams p;
  for (int K : {0, 3, 7}) {
    const auto e = energy_exact(p, solve_tau_numeric(strength_param(p.mu), K));
    EXPECT_EQ(e.kappa, Rational(2));
    EXPECT_EQ(e.energy, Rational(-4));
  }
}

TEST(Energy, FirstOrder) {
  ModelParams p;
  p.lambda = Rational(1, 100);
  const auto e = energy_eval(p, solve_tau_numeric(strength_param(p.mu), 1));
  EXPECT_NEAR(e.kappa, 2.0 - 24.0 / 35.0 * 0.01, 1e-15);
  EXPECT_NEAR(e.energy, -3.9726184, 1e-7);
  EXPECT_FALSE(e.outside_window);
  p.lambda = Rational(-1);
  EXPECT_TRUE(energy_eval(p, solve_tau_numeric(strength_param(p.mu), 1)).outside_window);
}

TEST(Energy, SlopePositive) {
  // dE/dlambda at 0 = -4 mu tau1 > 0, equal to 4mu(mu+1)/((mu+1/2)(mu+3/2))
  for (int k = 1; k <= 12; ++k) {
    const Rational mu(k, 3);
    const Rational t1 = solve_tau_numeric(strength_param(mu), 1).moment(1);
    const Rational slope = Rational(-4) * mu * t1;
    EXPECT_GT(slope.sign(), 0);
    EXPECT_EQ(slope, Rational(4) * mu * (mu + 1) / ((mu + Rational(1, 2)) * (mu + Rational(3, 2))));
  }
}

TEST(Energy, Preconditions) {
  ModelParams p;
  const auto t = solve_tau_numeric(strength_param(p.mu), 2);
  p.parity = 1;
  EXPECT_THROW(energy_exact(p, t), domain_error);
  p.parity = 0;
  p.mu = Rational(3);
  EXPECT_THROW(energy_exact(p, t), domain_error);
}

TEST(Wavefunction, Evaluation) {
  ModelParams p;
  const auto w0 = wave_coefficients(solve_tau_numeric(strength_param(p.mu), 3), 4);
  for (double x : {0.0, 0.4, 1.7, 3.0}) {
    const double s = 1.0 / std::cosh(x);
    EXPECT_NEAR(wavefunction_eval(x, p, w0, 5), s * s, 1e-15);
  }
  p.lambda = Rational(1, 100);
  const auto w = wave_coefficients(solve_tau_numeric(strength_param(p.mu), 5), 8);
  double sum = 0;
  for (int n = 0; n <= 8; ++n) sum += w.coefficient(n, p.lambda).to_double();
  EXPECT_NEAR(wavefunction_eval(0.0, p, w, 9), sum, 1e-15);
  EXPECT_GT(sum, 0.0);
  const double kappa = w.kappa(p.lambda).to_double();
  for (double x : {10.0, 14.0}) {
    const double ratio = wavefunction_eval(x + 1, p, w, 9) / wavefunction_eval(x, p, w, 9);
    EXPECT_NEAR(ratio / std::exp(-kappa), 1.0, 0.01);
  }
  EXPECT_THROW(wavefunction_eval(0.0, p, w, 10), domain_error);
}
