#pragma once

#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/truncated_series.hpp"
#include "ppt/error.hpp"

namespace ppt {

// Matrix elements of the three-term recurrence
//   lambda c_{n-1} + beta_n c_n + alpha_{n+1} c_{n+1} = 0
// as functions of tau = epsilon + a:
//   alpha_n = n/2 - n^2 - 2 n tau,  beta_0 = tau^2 - a^2,  beta_n = n^2 + 2 n tau + beta_0.
// Each has a scalar form (any field C) and a lambda-series form.

template <typename C>
C alpha_value(int n, const C& tau) {
  if (n < 1) throw domain_error("alpha_n is defined for n >= 1");
  return C(Rational(n, 2) - Rational(n * n)) - C(2 * n) * tau;
}

template <typename C>
C beta_value(int n, const C& tau, const C& a) {
  if (n < 0) throw domain_error("beta_n is defined for n >= 0");
  const C b0 = tau * tau - a * a;
  if (n == 0) return b0;
  return b0 + C(n * n) + C(2 * n) * tau;
}

template <typename C>
TruncatedSeries<C> alpha_elem(int n, const TruncatedSeries<C>& tau) {
  if (n < 1) throw domain_error("alpha_n is defined for n >= 1");
  return tau * C(-2 * n) + C(Rational(n, 2) - Rational(n * n));
}

/// beta_0 = tau^2 - a^2 with a = tau[0].
template <typename C>
TruncatedSeries<C> beta0_elem(const TruncatedSeries<C>& tau) {
  const C& a = tau.constant_term();
  return tau * tau - a * a;
}

template <typename C>
TruncatedSeries<C> beta_elem(int n, const TruncatedSeries<C>& tau) {
  if (n < 0) throw domain_error("beta_n is defined for n >= 0");
  TruncatedSeries<C> b0 = beta0_elem(tau);
  if (n == 0) return b0;
  return b0 + tau * C(2 * n) + C(n * n);
}

}  // namespace ppt
