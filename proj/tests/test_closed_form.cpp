#include <gtest/gtest.h>

#include <cmath>

#include "ppt/closed_form.hpp"

using namespace ppt;

TEST(Unperturbed, Kappa) {
  EXPECT_EQ(unperturbed_kappa(Rational(2), 0, 0), Rational(2));
  EXPECT_EQ(unperturbed_kappa(Rational(2), 0, 1), Rational(1));
  EXPECT_THROW(unperturbed_kappa(Rational(2), 1, 0), domain_error);
  EXPECT_THROW(unperturbed_kappa(Rational(2), 0, 2), domain_error);
  EXPECT_EQ(unperturbed_kappa(Rational(37, 10), 1, 1), Rational(7, 10));
}

TEST(Unperturbed, Coefficients) {
  EXPECT_EQ(unperturbed_coeffs(Rational(2), 0, 0), std::vector<Rational>{Rational(1)});
  const auto c = unperturbed_coeffs(Rational(4), 1, 0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], Rational(-7, 6));
  EXPECT_EQ(unperturbed_coeffs(Rational(7), 2, 1).size(), 3u);
}

TEST(Unperturbed, Values) {
  EXPECT_DOUBLE_EQ(unperturbed_psi(0.0, unperturbed_state(Rational(2), 0, 0)), 1.0);
  EXPECT_DOUBLE_EQ(unperturbed_psi(0.0, unperturbed_state(Rational(2), 0, 1)), 0.0);
  EXPECT_NEAR(unperturbed_psi(0.0, unperturbed_state(Rational(4), 1, 0)), -1.0 / 6.0, 1e-15);
}

namespace {

double residual_ratio(const UnperturbedState& s) {
  const double mu = s.mu.to_double(), k = s.kappa0.to_double(), h = 1e-3;
  double worst = 0.0, peak = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = 0.01 + 11.98 * i / 199.0;
    const double p = unperturbed_psi(x, s);
    // five-point stencil: the three-point O(h^2) error alone exceeds 1e-6 once kappa^4 is large
    const double d2 = (-unperturbed_psi(x + 2 * h, s) + 16 * unperturbed_psi(x + h, s) - 30 * p +
                       16 * unperturbed_psi(x - h, s) - unperturbed_psi(x - 2 * h, s)) /
                      (12 * h * h);
    const double sech = 1.0 / std::cosh(x);
    worst = std::max(worst, std::abs(-d2 - mu * (mu + 1) * sech * sech * p + k * k * p));
    peak = std::max(peak, std::abs(p));
  }
  return worst / peak;
}

}  // namespace

TEST(Unperturbed, EigenResidual) {
  for (const auto& [mu, n, p] : {std::tuple{Rational(2), 0, 0}, {Rational(2), 0, 1}, {Rational(5), 1, 0},
                                 {Rational(5), 2, 0}, {Rational(37, 10), 1, 1}})
    EXPECT_LE(residual_ratio(unperturbed_state(mu, n, p)), 1e-6) << mu << " " << n << " " << p;
}

TEST(Unperturbed, Orthogonality) {
  const auto s0 = unperturbed_state(Rational(5), 0, 0), s1 = unperturbed_state(Rational(5), 1, 0);
  const int n = 24000;
  const double h = 24.0 / n;
  double overlap = 0, n0 = 0, n1 = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = -12.0 + i * h, w = (i == 0 || i == n) ? 0.5 : 1.0;
    const double a = unperturbed_psi(x, s0), b = unperturbed_psi(x, s1);
    overlap += w * a * b;
    n0 += w * a * a;
    n1 += w * b * b;
  }
  EXPECT_LE(std::abs(overlap) * h, 1e-8 * std::sqrt(n0 * h * n1 * h));
}

TEST(Unperturbed, Parity) {
  for (int p : {0, 1}) {
    const auto s = unperturbed_state(Rational(5), 1, p);
    for (double x : {0.3, 1.1, 2.9}) EXPECT_DOUBLE_EQ(unperturbed_psi(-x, s), (p ? -1.0 : 1.0) * unperturbed_psi(x, s));
  }
}
