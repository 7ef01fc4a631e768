#pragma once

#include <boost/multiprecision/float128.hpp>

#include <string>
#include <type_traits>

#include "ppt/algebra/rational.hpp"

namespace ppt {

/// IEEE binary128 (113-bit significand), used where double cannot resolve
/// the quantity under test.
using quad = boost::multiprecision::float128;

/// Nearest T to an exact rational (both parts rounded once, then divided).
template <typename T>
T to_real(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.to_double();
  } else {
    return T(r.num_ref().get_str().c_str()) / T(r.den_ref().get_str().c_str());
  }
}

template <typename T>
std::string real_to_string(const T& x, int digits = std::numeric_limits<T>::max_digits10) {
  if constexpr (std::is_same_v<T, double>) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
  } else {
    return x.str(digits, std::ios_base::scientific);
  }
}

}  // namespace ppt
