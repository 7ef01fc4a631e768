#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "ppt/error.hpp"

namespace ppt {

using Integer = mpz_class;

/// Exact rational number backed by GMP. Always canonical: denominator > 0,
/// numerator and denominator coprime, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw division_by_zero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    if (q.get_den() == 0) throw division_by_zero();
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  /// Exact value of a binary floating-point number.
  static Rational from_double(double v) {
    Rational r;
    r.q_ = mpq_class(v);
    return r;
  }

  const mpq_class& value() const noexcept { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// "p/q", or "p" for integers.
  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

 private:
  mpq_class q_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(double d) { return d == 0.0; }
inline std::string to_string(const Rational& r) { return r.to_string(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// x^n for integer n (negative powers allowed for nonzero x).
inline Rational pow(const Rational& x, long n) {
  if (n < 0) return Rational(1) / pow(x, -n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.num_ref().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.den_ref().get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

/// Converts an exact coefficient into the evaluation type T.
template <typename T>
T coefficient_cast(const Rational& r) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(r.to_double());
  } else {
    return T(r);
  }
}
template <typename T>
T coefficient_cast(const Integer& z) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(z.get_d());
  } else {
    return T(z);
  }
}

enum class ArithOp { add, sub, mul, div };

/// Dispatching form used by the CLI and tests; throws division_by_zero.
inline Rational rational_arith(ArithOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  return {};
}

}  // namespace ppt
