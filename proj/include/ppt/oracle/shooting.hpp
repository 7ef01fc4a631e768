#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ppt/closed_form.hpp"
#include "ppt/error.hpp"
#include "ppt/oracle/potential.hpp"
#include "ppt/oracle/precision.hpp"
#include "ppt/series/model.hpp"

namespace ppt::oracle {

enum class Integrator {
  rk4,     // classical fourth-order Runge-Kutta, fixed step
  taylor,  // high-order Taylor series steps with recursively generated potential coefficients
};

/// Inward shooting from x_max with the decaying seed psi = 1, psi' = -kappa.
struct ShootingConfig {
  double x_max = 25.0;
  double step = 1e-3;
  int parity = 0;
  double kappa_lo = 0.0;
  double kappa_hi = 0.0;
  double tol = 1e-10;
  Integrator integrator = Integrator::rk4;
  int taylor_order = 40;
  double taylor_step = 0.25;
  int max_iterations = 200;
  int renormalize_every = 1000;
};

/// Bracket around the unperturbed kappa(N, p), excluding the neighbours of
/// equal parity (kappa spacing 2), with x_max = max(25, 12 / kappa_lo).
inline ShootingConfig default_shooting_config(const ModelParams& params) {
  const double k0 = unperturbed_kappa(params.mu, params.level, params.parity).to_double();
  ShootingConfig c;
  c.parity = params.parity;
  c.kappa_lo = std::max(k0 - 0.9, 0.5 * k0);
  c.kappa_hi = k0 + 0.9;
  c.x_max = std::max(25.0, 12.0 / c.kappa_lo);
  return c;
}

/// Taylor stepping in binary128: eigenvalues good to ~1e-28.
inline ShootingConfig high_precision_config(const ModelParams& params) {
  ShootingConfig c = default_shooting_config(params);
  c.integrator = Integrator::taylor;
  c.tol = 1e-28;
  return c;
}

inline void validate(const ShootingConfig& c, bool need_bracket) {
  if (!(c.step > 0.0) || !(c.taylor_step > 0.0)) throw domain_error("step must be positive");
  if (!(c.x_max > 0.0)) throw domain_error("x_max must be positive");
  if (c.parity != 0 && c.parity != 1) throw domain_error("parity must be 0 or 1");
  if (c.taylor_order < 4) throw domain_error("taylor order must be at least 4");
  if (!need_bracket) return;
  if (!(c.kappa_lo > 0.0) || !(c.kappa_lo < c.kappa_hi)) throw domain_error("invalid kappa bracket");
  if (c.x_max * c.kappa_lo < 12.0 * (1.0 - 1e-12)) throw domain_error("x_max * kappa_lo must be >= 12");
}

template <typename T>
struct EigenResult {
  T kappa{};
  T energy{};
  int iterations = 0;
  T residual{};
};

/// Integrates psi'' = (V(x) + kappa^2) psi from x_max down to 0 for fixed
/// (mu, lambda). The potential (or its Taylor coefficients) is tabulated once
/// so that many kappa values can be tried cheaply.
template <typename T>
class Shooter {
 public:
  Shooter(const ModelParams& params, const ShootingConfig& config)
      : config_(config), mu_(to_real<T>(params.mu)), lambda_(to_real<T>(params.lambda)) {
    validate(config_, false);
    if (config_.integrator == Integrator::rk4) {
      steps_ = static_cast<std::size_t>(std::ceil(config_.x_max / config_.step));
      h_ = T(config_.x_max) / T(steps_);
      nodes_.resize(2 * steps_ + 1);
      for (std::size_t i = 0; i <= 2 * steps_; ++i) nodes_[i] = V(T(config_.x_max) - T(i) * h_ / T(2));
    } else {
      steps_ = static_cast<std::size_t>(std::ceil(config_.x_max / config_.taylor_step));
      h_ = T(config_.x_max) / T(steps_);
      const auto order = static_cast<std::size_t>(config_.taylor_order);
      taylor_.resize(steps_);
      for (std::size_t i = 0; i < steps_; ++i) taylor_[i] = potential_taylor(x_at(i), order);
    }
  }

  /// psi'(0)/max|psi| for even parity, psi(0)/max|psi| for odd parity.
  T mismatch(const T& kappa) const {
    if (!(kappa > T(0))) throw domain_error("kappa must be positive");
    Run run = integrate(kappa, {});
    const T& v = config_.parity == 0 ? run.state.dpsi : run.state.psi;
    return v / run.max_abs;
  }

  /// psi at the requested points (each in [0, x_max]), on a common scale.
  std::vector<T> profile(const T& kappa, std::span<const double> xs) const {
    for (double x : xs)
      if (x < 0.0 || x > config_.x_max) throw domain_error("sample point outside [0, x_max]");
    Run run = integrate(kappa, xs);
    std::vector<T> out(xs.size());
    using std::exp;
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = run.samples[i] * exp(run.sample_log_scale[i] - run.log_scale);
    return out;
  }

  const ShootingConfig& config() const { return config_; }

 private:
  struct State {
    T psi;
    T dpsi;
  };
  struct Run {
    State state;
    T max_abs;
    T log_scale{0};
    std::vector<T> samples;
    std::vector<T> sample_log_scale;
  };

  T V(const T& x) const { return potential_eval(x, mu_, lambda_); }
  T x_at(std::size_t i) const { return T(config_.x_max) - T(i) * h_; }

  // Taylor coefficients of V(x0 + s) through sech^2' = -2 tanh sech^2,
  // tanh' = sech^2, which avoids forming 1 - tanh^2 near the tail.
  std::vector<T> potential_taylor(const T& x0, std::size_t order) const {
    using std::cosh;
    using std::tanh;
    std::vector<T> t(order + 1), s2(order + 1), s4(order + 1), v(order + 1);
    const T sech = T(1) / cosh(x0);
    t[0] = tanh(x0);
    s2[0] = sech * sech;
    for (std::size_t k = 0; k < order; ++k) {
      T ts(0);
      for (std::size_t l = 0; l <= k; ++l) ts += t[l] * s2[k - l];
      t[k + 1] = s2[k] / T(k + 1);
      s2[k + 1] = T(-2) * ts / T(k + 1);
    }
    for (std::size_t k = 0; k <= order; ++k) {
      T acc(0);
      for (std::size_t l = 0; l <= k; ++l) acc += s2[l] * s2[k - l];
      s4[k] = acc;
      v[k] = -mu_ * (mu_ + T(1)) * s2[k] + T(4) * lambda_ * s4[k];
    }
    return v;
  }

  State rk4_step(const State& y, const T& dx, const T& v0, const T& vm, const T& v1, const T& k2) const {
    const T half = dx / T(2);
    const T a1 = y.dpsi, b1 = (v0 + k2) * y.psi;
    const T a2 = y.dpsi + half * b1, b2 = (vm + k2) * (y.psi + half * a1);
    const T a3 = y.dpsi + half * b2, b3 = (vm + k2) * (y.psi + half * a2);
    const T a4 = y.dpsi + dx * b3, b4 = (v1 + k2) * (y.psi + dx * a3);
    return State{y.psi + dx / T(6) * (a1 + T(2) * a2 + T(2) * a3 + a4),
                 y.dpsi + dx / T(6) * (b1 + T(2) * b2 + T(2) * b3 + b4)};
  }

  // psi_k of the local Taylor expansion about node i.
  std::vector<T> local_series(std::size_t i, const State& y, const T& k2) const {
    const auto& w = taylor_[i];
    const std::size_t n = w.size();
    std::vector<T> c(n + 1);
    c[0] = y.psi;
    c[1] = y.dpsi;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      T acc = k2 * c[k];
      for (std::size_t l = 0; l <= k; ++l) acc += w[l] * c[k - l];
      c[k + 2] = acc / T((k + 1) * (k + 2));
    }
    return c;
  }

  static State eval_series(const std::vector<T>& c, const T& s) {
    T p(0), d(0);
    for (std::size_t k = c.size(); k-- > 0;) {
      p = p * s + c[k];
      if (k >= 1) d = d * s + T(k) * c[k];
    }
    return State{p, d};
  }

  void rescale(Run& run) const {
    using std::abs;
    using std::log;
    const T f = std::max(abs(run.state.psi), abs(run.state.dpsi));
    if (!(f > T(0))) return;
    run.state.psi /= f;
    run.state.dpsi /= f;
    run.max_abs /= f;
    run.log_scale += log(f);
  }

  Run integrate(const T& kappa, std::span<const double> xs) const {
    using std::abs;
    using boost::multiprecision::isfinite;
    using std::isfinite;
    const T k2 = kappa * kappa;
    Run run{State{T(1), -kappa}, T(1), T(0), std::vector<T>(xs.size(), T(0)), std::vector<T>(xs.size(), T(0))};

    // samples sorted by decreasing x
    std::vector<std::size_t> order(xs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] > xs[b]; });
    std::size_t next = 0;

    auto record = [&](std::size_t idx, const State& s) {
      run.samples[idx] = s.psi;
      run.sample_log_scale[idx] = run.log_scale;
    };

    for (std::size_t i = 0; i < steps_; ++i) {
      const T x0 = x_at(i);
      const T x1 = x_at(i + 1);
      std::vector<T> local;
      if (config_.integrator == Integrator::taylor) local = local_series(i, run.state, k2);
      // samples inside (x1, x0]
      while (next < order.size() && T(xs[order[next]]) > x1) {
        const T x = T(xs[order[next]]);
        const T dx = x - x0;
        State s;
        if (config_.integrator == Integrator::taylor) {
          s = eval_series(local, dx);
        } else {
          s = rk4_step(run.state, dx, nodes_[2 * i], V(x0 + dx / T(2)), V(x), k2);
        }
        record(order[next], s);
        ++next;
      }
      if (config_.integrator == Integrator::taylor) {
        run.state = eval_series(local, x1 - x0);
      } else {
        run.state = rk4_step(run.state, -h_, nodes_[2 * i], nodes_[2 * i + 1], nodes_[2 * i + 2], k2);
      }
      if (!isfinite(run.state.psi) || !isfinite(run.state.dpsi))
        throw numerical_error("non-finite wave function during inward integration");
      run.max_abs = std::max(run.max_abs, abs(run.state.psi));
      if (config_.integrator == Integrator::taylor ||
          (i + 1) % static_cast<std::size_t>(std::max(1, config_.renormalize_every)) == 0)
        rescale(run);
    }
    while (next < order.size()) record(order[next++], run.state);  // x = 0
    return run;
  }

  ShootingConfig config_;
  T mu_;
  T lambda_;
  std::size_t steps_ = 0;
  T h_{};
  std::vector<T> nodes_;                // RK4: V at x_max - i h/2
  std::vector<std::vector<T>> taylor_;  // Taylor: V coefficients per node
};

template <typename T = double>
T shoot_mismatch(const T& kappa, const ModelParams& params, const ShootingConfig& config) {
  return Shooter<T>(params, config).mismatch(kappa);
}

/// Bisection on the mismatch within [kappa_lo, kappa_hi]. Converged once the
/// half-width and |mismatch| are both within tol.
template <typename T = double>
EigenResult<T> find_kappa(const ModelParams& params, const ShootingConfig& config) {
  validate(params);
  validate(config, true);
  if (config.parity != params.parity) throw domain_error("config parity differs from model parity");
  const Shooter<T> shooter(params, config);
  T lo(config.kappa_lo), hi(config.kappa_hi);
  T mlo = shooter.mismatch(lo);
  const T mhi = shooter.mismatch(hi);
  if ((mlo > T(0)) == (mhi > T(0))) throw numerical_error("mismatch does not change sign on the kappa bracket");
  const T tol(config.tol);
  using std::abs;
  for (int it = 1; it <= config.max_iterations; ++it) {
    const T mid = (lo + hi) / T(2);
    const T m = shooter.mismatch(mid);
    if (m == T(0) || ((hi - lo) / T(2) <= tol && abs(m) <= tol)) return EigenResult<T>{mid, -mid * mid, it, abs(m)};
    if ((m > T(0)) == (mlo > T(0))) {
      lo = mid;
      mlo = m;
    } else {
      hi = mid;
    }
  }
  throw numerical_error("bisection iteration cap exceeded");
}

}  // namespace ppt::oracle
