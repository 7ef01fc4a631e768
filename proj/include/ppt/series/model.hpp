#pragma once

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt {

/// Physical inputs of the perturbed well
///   -psi'' - mu(mu+1) sech^2 x psi + 4 lambda sech^4 x psi = -kappa^2 psi
/// with the length scale fixed to one. lambda is stored exactly; a binary
/// float converts losslessly through Rational::from_double.
struct ModelParams {
  Rational mu{2};
  Rational lambda{0};
  int parity = 0;
  int level = 0;

  double mu_value() const { return mu.to_double(); }
  double lambda_value() const { return lambda.to_double(); }
};

inline void validate(const ModelParams& p) {
  if (p.mu.sign() <= 0) throw domain_error("mu must be positive");
  if (p.parity != 0 && p.parity != 1) throw domain_error("parity must be 0 or 1");
  if (p.level < 0) throw domain_error("level must be non-negative");
}

/// a = (2 mu + 1) / 4, the parameter in which every moment is rational.
inline Rational strength_param(const Rational& mu) {
  if (mu.sign() <= 0) throw domain_error("mu must be positive");
  return (Rational(2) * mu + Rational(1)) / Rational(4);
}

/// Inverse of strength_param.
inline Rational mu_from_strength(const Rational& a) { return Rational(2) * a - Rational(1, 2); }

}  // namespace ppt
