#pragma once

#include <initializer_list>
#include <random>

#include "ppt/algebra/polynomial.hpp"
#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/rational_function.hpp"

namespace testing_support {

using ppt::Integer;
using ppt::Polynomial;
using ppt::Rational;
using ppt::RationalFunction;

// Ascending coefficients in a.
inline Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

inline Polynomial power(const Polynomial& p, int e) {
  Polynomial r(Rational(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

// -(1+4a) D / (prefactor * denominator), the closed shape of tau^(K).
inline RationalFunction reference_moment(const Polynomial& d, long prefactor, const Polynomial& denominator) {
  return RationalFunction(-(poly({1, 4}) * d), denominator.scaled(Rational(prefactor)));
}

inline RationalFunction reference_tau1() { return RationalFunction(-poly({1, 4}), poly({0, 4}) * poly({1, 2})); }

inline RationalFunction reference_tau2() {
  const Polynomial den = power(poly({1, 2}), 3) * power(poly({0, 1}), 3) * poly({1, 1});
  return reference_moment(poly({1, 3, 8, 8}), 32, den);
}

inline Polynomial d7() { return poly({3, 26, 97, 168, 196, 288, 320, 128}); }
inline Polynomial d12() {
  return poly({90, 1335, 8815, 32715, 69135, 54250, -106568, -340152, -378096, -165184, 22272, 43008, 10240});
}

inline RationalFunction reference_tau3() {
  const Polynomial den = power(poly({0, 1}), 5) * power(poly({1, 2}), 5) * power(poly({1, 1}), 2) * poly({3, 2});
  return reference_moment(d7(), 128, den);
}

inline RationalFunction reference_tau4() {
  const Polynomial den = power(poly({0, 1}), 7) * power(poly({1, 2}), 7) * power(poly({1, 1}), 3) *
                         power(poly({3, 2}), 2) * poly({2, 1});
  return reference_moment(d12(), 2048, den);
}

// Small random rational with numerator in [-range, range], denominator in [1, range].
inline Rational random_rational(std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> n(-range, range), d(1, range);
  return Rational(n(rng), d(rng));
}

inline Rational random_positive(std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> n(1, range), d(1, range);
  return Rational(n(rng), d(rng));
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree = 3, long range = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, range));
  return Polynomial(std::move(c));
}

inline RationalFunction random_ratfunc(std::mt19937_64& rng) {
  Polynomial den;
  do {
    den = random_poly(rng, 2);
  } while (den.is_zero());
  return RationalFunction(random_poly(rng), den);
}

}  // namespace testing_support
