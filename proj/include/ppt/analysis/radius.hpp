#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt::analysis {

enum class RadiusMethod {
  ratio,  // |t_{k-1} / t_k|
  root,   // |t_k|^(-1/k)
};

/// Raw estimate sequence; no extrapolation is attempted.
struct RadiusReport {
  RadiusMethod method = RadiusMethod::ratio;
  std::vector<int> orders;        // k of each estimate
  std::vector<double> estimates;  // same length as orders
  std::vector<int> skipped;       // k dropped because a needed coefficient was zero

  bool empty() const { return estimates.empty(); }
  double last() const {
    if (estimates.empty()) throw domain_error("no radius estimate available");
    return estimates.back();
  }
};

namespace detail {

inline double log_abs(const Rational& r) {
  // log|p/q| via mantissa/exponent so very small moments do not underflow
  long ep = 0, eq = 0;
  const double mp = mpz_get_d_2exp(&ep, r.num_ref().get_mpz_t());
  const double mq = mpz_get_d_2exp(&eq, r.den_ref().get_mpz_t());
  return std::log(std::abs(mp)) - std::log(mq) + static_cast<double>(ep - eq) * std::log(2.0);
}

}  // namespace detail

/// Estimates over k = 1..K from power-series coefficients t_0..t_K (t_0 is
/// only used by the ratio method at k = 1).
inline RadiusReport radius_sequence(const std::vector<Rational>& t, RadiusMethod method) {
  RadiusReport r;
  r.method = method;
  for (std::size_t k = 1; k < t.size(); ++k) {
    const int ki = static_cast<int>(k);
    if (t[k].is_zero() || (method == RadiusMethod::ratio && t[k - 1].is_zero())) {
      r.skipped.push_back(ki);
      continue;
    }
    const double lr = method == RadiusMethod::ratio ? detail::log_abs(t[k - 1]) - detail::log_abs(t[k])
                                                    : -detail::log_abs(t[k]) / static_cast<double>(k);
    r.orders.push_back(ki);
    r.estimates.push_back(std::exp(lr));
  }
  return r;
}

/// Radius estimates from the moments of a numeric tau series, K >= 6.
/// The ratio method starts at k = 2 so that the constant a does not enter.
inline RadiusReport radius_estimate(const NumericTau& tau, RadiusMethod method) {
  if (tau.order() < 6) throw domain_error("radius estimation needs tau to order >= 6");
  std::vector<Rational> t = tau.coefficients;
  t[0] = Rational(0);
  RadiusReport r = radius_sequence(t, method);
  if (method == RadiusMethod::ratio && !r.skipped.empty() && r.skipped.front() == 1) r.skipped.erase(r.skipped.begin());
  return r;
}

}  // namespace ppt::analysis
