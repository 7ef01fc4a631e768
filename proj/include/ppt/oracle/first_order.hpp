#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "ppt/error.hpp"

namespace ppt::oracle {

/// dE/dlambda at lambda = 0 for the ground state, by Hellmann-Feynman:
/// <psi0| 4 sech^4 |psi0> / <psi0|psi0> with psi0 = sech^mu x, integrated
/// numerically and checked against 4 mu (mu+1) / ((mu+1/2)(mu+3/2)).
inline double first_order_slope(double mu) {
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  // log sech x = -x - log1p(exp(-2x)) + log 2, stable for large x
  auto log_sech = [](double x) { return -x - std::log1p(std::exp(-2.0 * x)) + std::log(2.0); };
  auto norm = [&](double x) { return std::exp(2.0 * mu * log_sech(x)); };
  auto pert = [&](double x) { return 4.0 * std::exp((2.0 * mu + 4.0) * log_sech(x)); };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double inf = std::numeric_limits<double>::infinity();
  double err_n = 0.0, err_p = 0.0;
  const double num = Quad::integrate(pert, 0.0, inf, 15, 1e-14, &err_p);
  const double den = Quad::integrate(norm, 0.0, inf, 15, 1e-14, &err_n);
  if (!(den > 0.0) || err_n > 1e-10 * den || err_p > 1e-10 * num)
    throw numerical_error("first-order quadrature did not converge");
  const double slope = num / den;
  const double closed = 4.0 * mu * (mu + 1.0) / ((mu + 0.5) * (mu + 1.5));
  if (std::abs(slope - closed) > 1e-9) throw numerical_error("first-order quadrature disagrees with the closed form");
  return slope;
}

}  // namespace ppt::oracle
