#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "ppt/algebra/polynomial.hpp"
#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt {

/// Element of Q(a) in canonical form: numerator and denominator are integer
/// polynomials, coprime over Q, with no common integer factor across all
/// their coefficients, and the denominator's leading coefficient positive.
/// Two equal functions therefore have identical fields.
class RationalFunction {
 public:
  RationalFunction() : den_(Integer(1)) {}
  RationalFunction(int v) : RationalFunction(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& r)  // NOLINT(google-explicit-constructor)
      : num_(r.numerator()), den_(r.denominator()) {}
  RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : RationalFunction(p, Polynomial(Rational(1))) {}

  RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw division_by_zero();
    auto [sn, pn] = primitive_integer(num);
    auto [sd, pd] = primitive_integer(den);
    if (pn.is_zero()) {
      den_ = IntPolynomial(Integer(1));
      return;
    }
    // num/den = (sn/sd) * pn/pd with pn, pd primitive
    const Rational s = sn / sd;
    IntPolynomial g = gcd(pn, pd);
    if (g.degree() > 0) {
      pn = divide_exact(pn, g);
      pd = divide_exact(pd, g);
    }
    num_ = pn.scaled(s.numerator());
    den_ = pd.scaled(s.denominator());
    normalize_content();
  }

  /// The strength parameter a itself.
  static RationalFunction variable() {
    RationalFunction r;
    r.num_ = IntPolynomial::variable();
    return r;
  }

  /// Builds from integer polynomials already known to be coprime over Q.
  static RationalFunction from_coprime(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) throw division_by_zero();
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) {
      r.den_ = IntPolynomial(Integer(1));
      return r;
    }
    r.normalize_content();
    return r;
  }

  const IntPolynomial& int_numerator() const noexcept { return num_; }
  const IntPolynomial& int_denominator() const noexcept { return den_; }
  Polynomial numerator() const { return to_rational(num_); }
  Polynomial denominator() const { return to_rational(den_); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Value of a constant function.
  Rational constant_value() const {
    if (!is_constant()) throw domain_error("rational function is not constant");
    return Rational(num_.constant_term(), den_.constant_term());
  }

  Rational evaluate(const Rational& x) const {
    Rational d = to_rational(den_).evaluate(x);
    if (d.is_zero()) throw division_by_zero();
    return to_rational(num_).evaluate(x) / d;
  }

  double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return reduce(x.num_ + y.num_, x.den_);
    if (x.den_.is_constant() && y.den_.is_constant()) {
      return from_coprime(x.num_.scaled(y.den_.leading()) + y.num_.scaled(x.den_.leading()),
                          IntPolynomial(x.den_.leading() * y.den_.leading()));
    }
    const IntPolynomial g = gcd(x.den_, y.den_);
    if (g.degree() <= 0) {
      // coprime denominators: the sum is already reduced over Q
      return from_coprime(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    const IntPolynomial xr = divide_exact(x.den_, g);
    const IntPolynomial yr = divide_exact(y.den_, g);
    return reduce(x.num_ * yr + y.num_ * xr, x.den_ * yr);
  }

  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }

  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.is_constant()) return y.scaled(x.num_.leading(), x.den_.leading());
    if (y.is_constant()) return x.scaled(y.num_.leading(), y.den_.leading());
    IntPolynomial g1 = gcd(x.num_, y.den_);
    IntPolynomial g2 = gcd(y.num_, x.den_);
    IntPolynomial n1 = g1.degree() > 0 ? divide_exact(x.num_, g1) : x.num_;
    IntPolynomial d2 = g1.degree() > 0 ? divide_exact(y.den_, g1) : y.den_;
    IntPolynomial n2 = g2.degree() > 0 ? divide_exact(y.num_, g2) : y.num_;
    IntPolynomial d1 = g2.degree() > 0 ? divide_exact(x.den_, g2) : x.den_;
    return from_coprime(n1 * n2, d1 * d2);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw division_by_zero();
    return from_coprime(den_, num_);
  }

  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) { return x * y.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.leading() == 1) return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

 private:
  // Multiplies by the integer ratio p/q.
  RationalFunction scaled(const Integer& p, const Integer& q) const {
    return from_coprime(num_.scaled(p), den_.scaled(q));
  }

  static RationalFunction reduce(const IntPolynomial& num, const IntPolynomial& den) {
    if (num.is_zero()) return {};
    const IntPolynomial g = gcd(num, den);
    if (g.degree() <= 0) return from_coprime(num, den);
    return from_coprime(divide_exact(num, g), divide_exact(den, g));
  }

  void normalize_content() {
    Integer g = content(num_);
    const Integer cd = content(den_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cd.get_mpz_t());
    if (sgn(den_.leading()) < 0) g = -g;
    if (g != 1) {
      num_ = divide_coefficients(num_, g);
      den_ = divide_coefficients(den_, g);
    }
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }
inline std::string to_string(const RationalFunction& r) { return r.to_string(); }

/// Canonical reduced form of num/den; throws division_by_zero for den = 0.
inline RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

}  // namespace ppt
