#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "ppt/algebra/affine.hpp"
#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/rational_function.hpp"
#include "ppt/algebra/truncated_series.hpp"
#include "ppt/error.hpp"
#include "ppt/series/elements.hpp"

namespace ppt {

enum class TauMode { symbolic, numeric };

/// tau(lambda) = a + tau^(1) lambda + ... + tau^(K) lambda^K, where
/// epsilon = tau - a shifts the ground-state exponent. Coefficients are
/// rational functions of a (symbolic) or exact rationals at fixed a (numeric).
template <typename C>
struct TauSeries {
  std::vector<C> coefficients;  // tau^(0) = a, ..., tau^(K)
  TauMode mode = std::is_same_v<C, RationalFunction> ? TauMode::symbolic : TauMode::numeric;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const C& a() const { return coefficients.front(); }
  const C& moment(int j) const { return coefficients.at(static_cast<std::size_t>(j)); }

  TruncatedSeries<C> as_series() const { return TruncatedSeries<C>(coefficients); }

  /// epsilon(lambda) = tau(lambda) - a.
  TruncatedSeries<C> epsilon() const {
    TruncatedSeries<C> e(coefficients);
    e[0] = C(0);
    return e;
  }
};

using SymbolicTau = TauSeries<RationalFunction>;
using NumericTau = TauSeries<Rational>;

/// One j -> j+1 reduction of the gamma recurrences: gamma_{j-2}, gamma_{j-1},
/// B_j = beta_j gamma_{j-1} - alpha_j gamma_{j-2} and A_{j+1} = alpha_{j+1} gamma_{j-1},
/// all after the moment tau^(j) has been substituted. `condition` is the
/// lambda^0 part of B_j before substitution, affine in u = tau^(j).
template <typename C>
struct GammaStage {
  int j = 0;
  TruncatedSeries<C> gamma_prev2;
  TruncatedSeries<C> gamma_prev1;
  TruncatedSeries<C> bhat;
  TruncatedSeries<C> ahat;
  Affine<C> condition;
  C moment;
};

struct SolveOptions {
  int max_symbolic_order = 8;
  int max_numeric_order = 30;
};

/// gamma_{-1}..gamma_{s-1} plus the last B_s and A_{s+1}.
template <typename X>
struct GammaChain {
  std::vector<TruncatedSeries<X>> gamma;  // gamma[i] holds gamma_{i-1}
  TruncatedSeries<X> last_bhat;
  TruncatedSeries<X> last_ahat;
};

/// Runs the optimal recurrences gamma_{i} = (beta_i gamma_{i-1} - alpha_i gamma_{i-2}) / lambda
/// for i < stages, starting from gamma_{-1} = 1 and gamma_0 = beta_0 / lambda.
/// Each division by lambda lowers the series order by one and requires the
/// lambda^0 term of the corresponding B_i to vanish.
template <typename X>
GammaChain<X> run_gamma_chain(const TruncatedSeries<X>& tau, int stages) {
  GammaChain<X> chain;
  TruncatedSeries<X> gm2 = TruncatedSeries<X>::constant(X(1), tau.order());
  chain.gamma.push_back(gm2);
  TruncatedSeries<X> bhat = beta0_elem(tau);
  for (int i = 1; i <= stages; ++i) {
    TruncatedSeries<X> gm1 = bhat.shift_down();
    chain.gamma.push_back(gm1);
    bhat = beta_elem(i, tau) * gm1 - alpha_elem(i, tau) * gm2;
    gm2 = std::move(gm1);
  }
  chain.last_bhat = std::move(bhat);
  chain.last_ahat = alpha_elem(stages + 1, tau) * chain.gamma.back();
  return chain;
}

/// Stage j: with tau^(0..j-1) known, carries u = tau^(j) as an affine
/// unknown through the chain truncated at lambda-order j and fixes it by
/// requiring the lambda^0 coefficient of B_j to vanish.
template <typename C>
GammaStage<C> eliminate_stage(const std::vector<C>& known, int j) {
  if (j < 1 || static_cast<std::size_t>(j) != known.size())
    throw domain_error("eliminate_stage needs exactly tau^(0..j-1)");
  using A = Affine<C>;
  std::vector<A> coeffs;
  coeffs.reserve(known.size() + 1);
  for (const auto& c : known) coeffs.emplace_back(c);
  coeffs.push_back(A::unknown());
  const TruncatedSeries<A> tau(std::move(coeffs));

  GammaChain<A> chain = run_gamma_chain(tau, j);
  GammaStage<C> stage;
  stage.j = j;
  stage.condition = chain.last_bhat[0];
  stage.moment = stage.condition.solve_zero(j);

  const C& u = stage.moment;
  auto sub = [&u](const A& x) { return x.substitute(u); };
  const std::size_t n = chain.gamma.size();
  stage.gamma_prev1 = chain.gamma[n - 1].map(sub);
  stage.gamma_prev2 = chain.gamma[n - 2].map(sub);
  stage.bhat = chain.last_bhat.map(sub);
  stage.ahat = chain.last_ahat.map(sub);
  return stage;
}

/// Moments tau^(0..K) by staged elimination. `trace`, when given, receives
/// every stage.
template <typename C>
TauSeries<C> solve_tau(const C& a, int order, const SolveOptions& options = {},
                       std::vector<GammaStage<C>>* trace = nullptr) {
  if (order < 0) throw domain_error("order must be non-negative");
  constexpr bool symbolic = std::is_same_v<C, RationalFunction>;
  const int limit = symbolic ? options.max_symbolic_order : options.max_numeric_order;
  if (order > limit) throw order_guard_exceeded(order, limit);

  TauSeries<C> result;
  result.coefficients.push_back(a);
  for (int j = 1; j <= order; ++j) {
    GammaStage<C> stage = eliminate_stage(result.coefficients, j);
    result.coefficients.push_back(stage.moment);
    if (trace) trace->push_back(std::move(stage));
  }
  return result;
}

inline SymbolicTau solve_tau_symbolic(int order, const SolveOptions& options = {}) {
  return solve_tau(RationalFunction::variable(), order, options);
}

inline NumericTau solve_tau_numeric(const Rational& a, int order, const SolveOptions& options = {}) {
  if (a.sign() <= 0) throw domain_error("a must be positive");
  return solve_tau(a, order, options);
}

/// Substitutes a = a0 into every symbolic moment.
inline NumericTau substitute(const SymbolicTau& tau, const Rational& a0) {
  NumericTau out;
  for (const auto& c : tau.coefficients) out.coefficients.push_back(c.evaluate(a0));
  return out;
}

/// Full chain gamma_{-1}..gamma_{K-1} for a solved tau, with
/// gamma_{j} at order K-1-j. Throws nonzero_constant_term if some B_j with
/// j < K violates the first-line rule; `last_bhat` holds B_K (order 0).
template <typename C>
GammaChain<C> gamma_chain(const TauSeries<C>& tau) {
  return run_gamma_chain(tau.as_series(), tau.order());
}

}  // namespace ppt
