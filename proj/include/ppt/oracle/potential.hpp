#pragma once

#include <cmath>

namespace ppt::oracle {

/// V(x) = -mu(mu+1) sech^2 x + 4 lambda sech^4 x.
template <typename T>
T potential_eval(const T& x, const T& mu, const T& lambda) {
  using std::cosh;
  const T s = T(1) / cosh(x);
  const T s2 = s * s;
  return -mu * (mu + T(1)) * s2 + T(4) * lambda * s2 * s2;
}

}  // namespace ppt::oracle
