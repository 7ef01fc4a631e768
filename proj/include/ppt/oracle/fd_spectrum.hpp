#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ppt/closed_form.hpp"
#include "ppt/error.hpp"
#include "ppt/oracle/potential.hpp"
#include "ppt/series/model.hpp"

namespace ppt::oracle {

/// Symmetric tridiagonal matrix: diag[i], with a constant off-diagonal.
struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;
};

/// Number of eigenvalues strictly below sigma (Sturm sequence via the LDL^T
/// pivots).
inline std::size_t sturm_count(const Tridiagonal& m, double sigma) {
  std::size_t count = 0;
  const double off2 = m.off * m.off;
  double q = 1.0;
  for (std::size_t i = 0; i < m.diag.size(); ++i) {
    q = m.diag[i] - sigma - (i ? off2 / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

/// k-th smallest eigenvalue by bisection on the Sturm count.
inline double kth_eigenvalue(const Tridiagonal& m, std::size_t k, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(m, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Central-difference Hamiltonian on grid_n intervals of [-x_max, x_max]
/// with Dirichlet ends (grid_n - 1 interior points).
inline Tridiagonal fd_hamiltonian(const ModelParams& params, int grid_n, double x_max) {
  const double h = 2.0 * x_max / grid_n;
  const double mu = params.mu_value();
  const double lambda = params.lambda_value();
  Tridiagonal m;
  m.off = -1.0 / (h * h);
  m.diag.resize(static_cast<std::size_t>(grid_n - 1));
  for (int i = 1; i < grid_n; ++i) m.diag[static_cast<std::size_t>(i - 1)] = 2.0 / (h * h) + potential_eval(-x_max + i * h, mu, lambda);
  return m;
}

inline std::vector<double> negative_eigenvalues(const Tridiagonal& m) {
  double lo = 0.0;
  for (double d : m.diag) lo = std::min(lo, d - 2.0 * std::abs(m.off));
  const std::size_t n_neg = sturm_count(m, 0.0);
  std::vector<double> out;
  for (std::size_t k = 0; k < n_neg; ++k) out.push_back(kth_eigenvalue(m, k, lo, 0.0));
  return out;
}

/// Lowest (negative) eigenvalues, ascending. The O(h^2) discretisation error
/// is removed by Richardson extrapolation against a grid twice as fine
/// unless `extrapolate` is false.
inline std::vector<double> fd_spectrum(const ModelParams& params, int grid_n, double x_max, bool extrapolate = true) {
  validate(params);
  if (grid_n < 500) throw domain_error("grid_n must be at least 500");
  if (!(x_max > 0.0)) throw domain_error("x_max must be positive");
  std::vector<double> coarse = negative_eigenvalues(fd_hamiltonian(params, grid_n, x_max));

  // Unperturbed states with kappa(N, p) >= 1/2 must survive any perturbative lambda.
  std::size_t expected = 0;
  for (int n = 0;; ++n) {
    const Rational k = params.mu - Rational(n);
    if (k < Rational(1, 2)) break;
    ++expected;
  }
  if (coarse.size() < expected) throw numerical_error("grid too coarse: bound states missing from the spectrum");
  if (!extrapolate) return coarse;

  const std::vector<double> fine = negative_eigenvalues(fd_hamiltonian(params, 2 * grid_n, x_max));
  const std::size_t n = std::min(coarse.size(), fine.size());
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
  return out;
}

}  // namespace ppt::oracle
