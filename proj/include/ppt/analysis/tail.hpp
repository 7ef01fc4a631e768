#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <vector>

#include "ppt/error.hpp"

namespace ppt::analysis {

namespace detail {

inline bool is_gamma_pole(double x) { return x <= 0.0 && std::floor(x) == x; }

// log|Gamma(x)| with its sign.
inline double signed_lgamma(double x, int& sign) {
  if (is_gamma_pole(x)) throw domain_error("Gamma function pole");
  return boost::math::lgamma(x, &sign);
}

}  // namespace detail

/// Gamma(eps+n) Gamma(eps+n+mu+1/2) / (n! Gamma(2 eps+n+mu+1)), the large-n
/// behaviour of the wave-function coefficients; evaluated in log space.
inline double gamma_estimate(int n, double epsilon, double mu) {
  if (n < 1) throw domain_error("n must be >= 1");
  int s1 = 1, s2 = 1, s3 = 1;
  const double log_value = detail::signed_lgamma(epsilon + n, s1) + detail::signed_lgamma(epsilon + n + mu + 0.5, s2) -
                           std::lgamma(n + 1.0) - detail::signed_lgamma(2.0 * epsilon + n + mu + 1.0, s3);
  return s1 * s2 * s3 * std::exp(log_value);
}

/// Ratio h_{n+2}/h_{n+1} of the lambda-free two-term recurrence.
inline double two_term_factor(int n, double epsilon, double mu) {
  return (epsilon + n + 1.0) * (epsilon + n + mu + 1.5) / ((n + 2.0) * (2.0 * epsilon + n + mu + 2.0));
}

/// Iterates (n+2)(2eps+n+mu+2) h_{n+2} = (eps+n+1)(eps+n+mu+3/2) h_{n+1} + lambda h_n
/// from h_{n_lo} = 1 (and h_{n_lo-1} = 1 for the lambda term), then returns the
/// least-squares slope of log|h_n| against log n over [n_lo, n_hi].
inline double tail_fit(double epsilon, double mu, int n_lo, int n_hi, double lambda = 0.0) {
  if (n_lo < 10 || n_hi < 10 * n_lo) throw domain_error("tail_fit needs n_hi >= 10 n_lo >= 100");
  double prev = 1.0, cur = 1.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = n_lo;; ++n) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(std::abs(cur));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
    if (n == n_hi) break;
    // cur = h_n, prev = h_{n-1}; recurrence index m = n - 1 gives h_{n+1}
    const int m = n - 1;
    const double next =
        ((epsilon + m + 1.0) * (epsilon + m + mu + 1.5) * cur + lambda * prev) / ((m + 2.0) * (2.0 * epsilon + m + mu + 2.0));
    prev = cur;
    cur = next;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace ppt::analysis
