#pragma once

#include <string>

#include "ppt/algebra/polynomial.hpp"
#include "ppt/algebra/rational_function.hpp"

namespace ppt::io {

/// Descending-degree text such as "128*a^7 + 320*a^6 - 3".
inline std::string format_polynomial(const IntPolynomial& p, const std::string& var = "a") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    const Integer m = neg ? Integer(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = m == 1 && k > 0;
    if (!unit) out += m.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::string format_rational_function(const RationalFunction& r) {
  const auto& n = r.int_numerator();
  const auto& d = r.int_denominator();
  const std::string ns = format_polynomial(n);
  if (d.is_constant() && d.leading() == 1) return ns;
  const std::string ds = format_polynomial(d);
  return (n.degree() > 0 ? "(" + ns + ")" : ns) + " / " + (d.degree() > 0 ? "(" + ds + ")" : ds);
}

}  // namespace ppt::io
