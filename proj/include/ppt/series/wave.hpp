#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/truncated_series.hpp"
#include "ppt/error.hpp"
#include "ppt/series/elements.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt {

/// Coefficients c_n(lambda) = lambda^n f_n(lambda) of the expansion
///   psi(x) = tanh^p x * sum_n c_n(lambda) sech^(2n + kappa) x,
/// kappa = kappa_base + 2 epsilon(lambda). f_j is kept at order K-j; indices
/// beyond the solved order carry a zero order-0 placeholder and are flagged.
template <typename C>
struct WaveSeries {
  int n_max = 0;
  std::vector<TruncatedSeries<C>> f;
  std::vector<bool> truncated;
  C kappa_base{};
  TruncatedSeries<C> epsilon;

  /// c_n(lambda), exact.
  C coefficient(int n, const C& lambda) const {
    const auto& fn = f.at(static_cast<std::size_t>(n));
    C lam_n(1);
    for (int i = 0; i < n; ++i) lam_n = lam_n * lambda;
    return lam_n * fn.evaluate(lambda);
  }

  C kappa(const C& lambda) const { return kappa_base + C(2) * epsilon.evaluate(lambda); }
};

/// f_0 = 1 and f_j = gamma_{j-1} / ((-alpha_1)...(-alpha_j)).
template <typename C>
WaveSeries<C> wave_coefficients(const TauSeries<C>& tau, int n_max) {
  const int K = tau.order();
  if (K < 1) throw domain_error("wave coefficients need tau solved to order >= 1");
  if (n_max < 1) throw domain_error("n_max must be >= 1");

  const TruncatedSeries<C> tau_s = tau.as_series();
  const GammaChain<C> chain = gamma_chain(tau);

  WaveSeries<C> w;
  w.n_max = n_max;
  w.kappa_base = C(2) * tau.a() - C(Rational(1, 2));
  w.epsilon = tau.epsilon();
  w.f.push_back(TruncatedSeries<C>::constant(C(1), static_cast<std::size_t>(K)));
  w.truncated.push_back(false);

  TruncatedSeries<C> denom = TruncatedSeries<C>::constant(C(1), static_cast<std::size_t>(K));
  for (int j = 1; j <= n_max; ++j) {
    if (j <= K) {
      denom = denom * (-alpha_elem(j, tau_s));
      const auto& g = chain.gamma[static_cast<std::size_t>(j)];  // gamma_{j-1}
      w.f.push_back(g / denom.truncated(g.order()));
      w.truncated.push_back(false);
    } else {
      w.f.push_back(TruncatedSeries<C>(0));
      w.truncated.push_back(true);
    }
  }
  return w;
}

/// psi at x from the first n_terms coefficients (unnormalized, c_0 = 1).
inline double wavefunction_eval(double x, const ModelParams& params, const WaveSeries<Rational>& wave,
                                int n_terms) {
  if (n_terms < 1 || n_terms > wave.n_max + 1) throw domain_error("n_terms out of range");
  const double kappa = wave.kappa(params.lambda).to_double();
  if (!(kappa > 0.0)) throw domain_error("non-positive kappa: state is not bound");
  const double s = 1.0 / std::cosh(x);
  const double s2 = s * s;
  double sum = 0.0;
  double sp = std::pow(s, kappa);
  for (int n = 0; n < n_terms; ++n) {
    sum += wave.coefficient(n, params.lambda).to_double() * sp;
    sp *= s2;
  }
  return params.parity == 1 ? std::tanh(x) * sum : sum;
}

}  // namespace ppt
