#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppt/algebra/polynomial.hpp"
#include "ppt/algebra/rational_function.hpp"
#include "ppt/error.hpp"

namespace ppt::analysis {

/// Comparison of tau^(K) with the closed pattern
///   -(1+4a) D_L / (2^M a^(2K-1) (1+2a)^(2K-1) prod_{m=2..K} (a+m/2)^(K+1-m)),
/// where each (a+m/2) is written in primitive integer form (a+1, 2a+3, ...).
struct StructureReport {
  int K = 0;
  int prefactor_pow2 = -1;        // M(K); -1 if the leftover constant is not a power of two
  IntPolynomial numerator_extra;  // D_L
  std::vector<std::pair<std::string, int>> denominator_exponents;
  int degree_L = -1;
  int expected_degree_L = 0;

  bool numerator_divisible = false;    // (1+4a) | numerator
  bool denominator_pattern = false;    // exponents as above, nothing else left
  bool prefactor_power_of_two = false;
  bool degree_law = false;             // deg D_L == (K+1)(K+2)/2 - 3
  bool integral_coefficients = false;

  bool matches_ansatz() const {
    return numerator_divisible && denominator_pattern && prefactor_power_of_two && degree_law && integral_coefficients;
  }
  int exponent(const std::string& factor) const {
    for (const auto& [name, e] : denominator_exponents)
      if (name == factor) return e;
    return 0;
  }
};

inline int expected_degree(int K) { return (K + 1) * (K + 2) / 2 - 3; }

namespace detail {

struct Factor {
  std::string name;
  IntPolynomial poly;
  int expected;
};

inline std::vector<Factor> pattern_factors(int K) {
  std::vector<Factor> f;
  f.push_back({"a", IntPolynomial{Integer(0), Integer(1)}, 2 * K - 1});
  f.push_back({"(1+2a)", IntPolynomial{Integer(1), Integer(2)}, 2 * K - 1});
  for (int m = 2; m <= K; ++m) {
    if (m % 2 == 0) {
      f.push_back({"(a+" + std::to_string(m / 2) + ")", IntPolynomial{Integer(m / 2), Integer(1)}, K + 1 - m});
    } else {
      f.push_back({"(a+" + std::to_string(m) + "/2)", IntPolynomial{Integer(m), Integer(2)}, K + 1 - m});
    }
  }
  return f;
}

}  // namespace detail

/// Clause-by-clause check by exact division; mismatches are reported, not thrown.
inline StructureReport structure_check(const RationalFunction& tau_k, int K) {
  if (K < 2) throw domain_error("structure_check needs K >= 2");
  StructureReport r;
  r.K = K;
  r.expected_degree_L = expected_degree(K);

  const IntPolynomial one_plus_4a{Integer(1), Integer(4)};
  try {
    r.numerator_extra = -divide_exact(tau_k.int_numerator(), one_plus_4a);
    r.numerator_divisible = true;
    r.degree_L = r.numerator_extra.degree();
    r.integral_coefficients = true;  // quotient of integer polynomials by a primitive divisor
    r.degree_law = r.degree_L == r.expected_degree_L;
  } catch (const inexact_division&) {
    r.numerator_divisible = false;
  }

  IntPolynomial rest = tau_k.int_denominator();
  bool pattern = true;
  for (const auto& f : detail::pattern_factors(K)) {
    int e = 0;
    while (rest.degree() > 0) {
      try {
        rest = divide_exact(rest, f.poly);
        ++e;
      } catch (const inexact_division&) {
        break;
      }
    }
    r.denominator_exponents.emplace_back(f.name, e);
    pattern = pattern && e == f.expected;
  }
  r.denominator_pattern = pattern && rest.degree() == 0;
  if (rest.degree() == 0 && sgn(rest.leading()) > 0) {
    const Integer& c = rest.leading();
    if (mpz_popcount(c.get_mpz_t()) == 1) {
      r.prefactor_power_of_two = true;
      r.prefactor_pow2 = static_cast<int>(mpz_scan1(c.get_mpz_t(), 0));
    }
  }
  return r;
}

}  // namespace ppt::analysis
