#pragma once

#include <cmath>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt {

struct ExactEnergy {
  Rational kappa;
  Rational energy;  // -kappa^2
};

struct EnergyResult {
  double kappa = 0.0;
  double energy = 0.0;
  bool outside_window = false;  // |lambda| >= 1: far outside the perturbative regime
};

/// Ground-state decay rate kappa = mu + 2 (tau(lambda) - a) summed through
/// the solved order, with E = -kappa^2.
inline ExactEnergy energy_exact(const ModelParams& params, const NumericTau& tau) {
  validate(params);
  if (params.parity != 0 || params.level != 0)
    throw domain_error("the tau expansion describes the ground state (p = 0, N = 0) only");
  if (tau.a() != strength_param(params.mu)) throw domain_error("tau was solved at a different strength parameter");
  const Rational eps = tau.epsilon().evaluate(params.lambda);
  ExactEnergy out;
  out.kappa = params.mu + Rational(2) * eps;
  out.energy = -(out.kappa * out.kappa);
  return out;
}

inline EnergyResult energy_eval(const ModelParams& params, const NumericTau& tau) {
  const ExactEnergy e = energy_exact(params, tau);
  EnergyResult r;
  r.kappa = e.kappa.to_double();
  r.energy = e.energy.to_double();
  r.outside_window = abs(params.lambda) >= Rational(1);
  return r;
}

}  // namespace ppt
