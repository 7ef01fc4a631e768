#pragma once

#include <cmath>
#include <cstddef>
#include <future>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"
#include "ppt/oracle/precision.hpp"
#include "ppt/oracle/shooting.hpp"
#include "ppt/series/energy.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt::analysis {

struct ScanRow {
  Rational lambda;
  Rational energy_series;  // exact, truncated at order K
  quad energy_oracle;
  double abs_delta = 0.0;
};

struct OrderScan {
  Rational mu;
  int K = 0;
  std::vector<ScanRow> rows;
  double slope = 0.0;       // least squares of log|delta| against log|lambda|
  bool slope_valid = false; // needs two rows with lambda != 0 and delta != 0

  /// |delta(l1)| / |delta(l2)|.
  double ratio(const Rational& l1, const Rational& l2) const {
    const ScanRow* a = nullptr;
    const ScanRow* b = nullptr;
    for (const auto& r : rows) {
      if (r.lambda == l1) a = &r;
      if (r.lambda == l2) b = &r;
    }
    if (!a || !b) throw domain_error("lambda not present in scan");
    return a->abs_delta / b->abs_delta;
  }
};

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Ground-state energy error of the order-K series against the binary128
/// shooting oracle, one row per lambda (rows run concurrently).
inline OrderScan order_error_scan(const Rational& mu, const std::vector<Rational>& lambdas, int K,
                                  bool parallel = true) {
  if (K < 1) throw domain_error("order must be >= 1");
  for (const auto& l : lambdas)
    if (abs(l) > Rational(1, 20)) throw domain_error("lambda outside the perturbative window |lambda| <= 0.05");

  const NumericTau tau = solve_tau_numeric(strength_param(mu), K);
  auto row = [&mu, &tau](const Rational& lambda) {
    ModelParams p;
    p.mu = mu;
    p.lambda = lambda;
    ScanRow r;
    r.lambda = lambda;
    r.energy_series = energy_exact(p, tau).energy;
    r.energy_oracle = oracle::find_kappa<quad>(p, oracle::high_precision_config(p)).energy;
    using boost::multiprecision::abs;
    r.abs_delta = static_cast<double>(abs(to_real<quad>(r.energy_series) - r.energy_oracle));
    return r;
  };

  OrderScan scan;
  scan.mu = mu;
  scan.K = K;
  if (parallel) {
    std::vector<std::future<ScanRow>> jobs;
    for (const auto& l : lambdas) jobs.push_back(std::async(std::launch::async, row, l));
    for (auto& j : jobs) scan.rows.push_back(j.get());
  } else {
    for (const auto& l : lambdas) scan.rows.push_back(row(l));
  }

  std::vector<double> xs, ys;
  for (const auto& r : scan.rows) {
    if (r.lambda.is_zero() || !(r.abs_delta > 0.0)) continue;
    xs.push_back(std::abs(r.lambda.to_double()));
    ys.push_back(r.abs_delta);
  }
  if (xs.size() >= 2) {
    scan.slope = loglog_slope(xs, ys);
    scan.slope_valid = true;
  }
  return scan;
}

}  // namespace ppt::analysis
