#pragma once

#include <cstddef>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/truncated_series.hpp"
#include "ppt/error.hpp"
#include "ppt/series/elements.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt {

/// Forward solve of lambda c_{n-1} + beta_n c_n + alpha_{n+1} c_{n+1} = 0
/// with c_{-1} = 0, c_0 = 1, at the fixed exponent shift epsilon.
inline std::vector<Rational> raw_recurrence(const ModelParams& params, const Rational& epsilon, int n_max) {
  if (n_max < 0) throw domain_error("n_max must be non-negative");
  const Rational a = strength_param(params.mu);
  const Rational tau = a + epsilon;
  std::vector<Rational> c{Rational(1)};
  Rational prev(0);
  for (int n = 0; n < n_max; ++n) {
    const Rational alpha = alpha_value(n + 1, tau);
    if (alpha.is_zero()) throw vanishing_alpha(n + 1);
    const Rational next = -(params.lambda * prev + beta_value(n, tau, a) * c.back()) / alpha;
    prev = c.back();
    c.push_back(next);
  }
  return c;
}

/// Leading principal minors D_0..D_n of the tridiagonal system:
/// D_{-1} = 1, D_0 = beta_0, D_m = beta_m D_{m-1} - lambda alpha_m D_{m-2}.
template <typename V, typename AlphaFn, typename BetaFn>
std::vector<V> determinant_chain(int n, const V& lambda, AlphaFn&& alpha, BetaFn&& beta) {
  std::vector<V> d;
  V older(1);
  d.push_back(beta(0));
  for (int m = 1; m <= n; ++m) {
    const V& prev = d.back();
    V next = beta(m) * prev - lambda * alpha(m) * older;
    older = prev;
    d.push_back(std::move(next));
  }
  return d;
}

/// D_n at fixed tau = a + epsilon. c_{n+1} = (-1)^{n+1} D_n / (alpha_1 ... alpha_{n+1}),
/// so D_n is proportional to c_{n+1}.
inline Rational det_coefficient(int n, const ModelParams& params, const Rational& epsilon) {
  if (n < 0) throw domain_error("n must be non-negative");
  const Rational a = strength_param(params.mu);
  const Rational tau = a + epsilon;
  auto d = determinant_chain<Rational>(
      n, params.lambda, [&](int m) { return alpha_value(m, tau); }, [&](int m) { return beta_value(m, tau, a); });
  return d.back();
}

/// Determinant minors as lambda-series with tau(lambda) truncated at the
/// solved order.
template <typename C>
std::vector<TruncatedSeries<C>> det_series(const TauSeries<C>& tau, int n) {
  const TruncatedSeries<C> t = tau.as_series();
  const auto order = static_cast<std::size_t>(tau.order());
  const TruncatedSeries<C> lam = TruncatedSeries<C>::variable(order);
  auto one = TruncatedSeries<C>::constant(C(1), order);
  std::vector<TruncatedSeries<C>> d{beta_elem(0, t)};
  TruncatedSeries<C> older = one;
  for (int m = 1; m <= n; ++m) {
    TruncatedSeries<C> next = beta_elem(m, t) * d.back() - lam * alpha_elem(m, t) * older;
    older = d.back();
    d.push_back(std::move(next));
  }
  return d;
}

/// c_{n+1} recovered from the minor D_n.
template <typename C>
TruncatedSeries<C> coefficient_from_minor(const TauSeries<C>& tau, int n, const TruncatedSeries<C>& minor) {
  const TruncatedSeries<C> t = tau.as_series();
  TruncatedSeries<C> prod = TruncatedSeries<C>::constant(C(1), static_cast<std::size_t>(tau.order()));
  for (int i = 1; i <= n + 1; ++i) prod = prod * alpha_elem(i, t);
  TruncatedSeries<C> c = minor / prod;
  return (n + 1) % 2 == 0 ? c : -c;
}

}  // namespace ppt
