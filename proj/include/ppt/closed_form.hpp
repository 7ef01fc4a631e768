#pragma once

#include <cmath>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt {

/// Unperturbed bound state (lambda = 0) with parity p and level N:
///   psi(x) = tanh^p x sech^kappa x 2F1(mu - N + 1/2, -N; 1 + kappa; sech^2 x),
/// kappa = mu - 2N - p. The hypergeometric series terminates after N+1 terms.
struct UnperturbedState {
  Rational mu;
  int level = 0;
  int parity = 0;
  Rational kappa0;
  std::vector<Rational> coeffs;
};

inline Rational unperturbed_kappa(const Rational& mu, int level, int parity) {
  if (mu.sign() <= 0) throw domain_error("mu must be positive");
  if (level < 0 || (parity != 0 && parity != 1)) throw domain_error("invalid (N, p)");
  const Rational k = mu - Rational(2 * level + parity);
  if (k.sign() <= 0) throw domain_error("no bound state: 2N + p must be below mu");
  return k;
}

/// k-th coefficient (mu - N + 1/2)_k (-N)_k / ((1 + kappa)_k k!).
inline std::vector<Rational> unperturbed_coeffs(const Rational& mu, int level, int parity) {
  const Rational kappa = unperturbed_kappa(mu, level, parity);
  const Rational upper = mu - Rational(level) + Rational(1, 2);
  const Rational lower = Rational(1) + kappa;
  std::vector<Rational> out{Rational(1)};
  for (int k = 0; k < level; ++k) {
    const Rational den = (lower + Rational(k)) * Rational(k + 1);
    if (den.is_zero()) throw domain_error("pole in the lower Pochhammer symbol");
    out.push_back(out.back() * (upper + Rational(k)) * Rational(k - level) / den);
  }
  return out;
}

inline UnperturbedState unperturbed_state(const Rational& mu, int level, int parity) {
  return UnperturbedState{mu, level, parity, unperturbed_kappa(mu, level, parity),
                          unperturbed_coeffs(mu, level, parity)};
}

inline double unperturbed_psi(double x, const UnperturbedState& state) {
  const double s = 1.0 / std::cosh(x);
  const double s2 = s * s;
  double series = 0.0;
  double sp = 1.0;
  for (const auto& c : state.coeffs) {
    series += c.to_double() * sp;
    sp *= s2;
  }
  const double value = std::pow(s, state.kappa0.to_double()) * series;
  return state.parity == 1 ? std::tanh(x) * value : value;
}

}  // namespace ppt
