#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt {

/// Dense univariate polynomial in the strength parameter `a`, ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <typename C>
class BasicPolynomial {
 public:
  using coefficient_type = C;

  BasicPolynomial() = default;
  BasicPolynomial(C constant) {  // NOLINT(google-explicit-constructor)
    if (!ppt::is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit BasicPolynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static BasicPolynomial monomial(C coeff, std::size_t degree) {
    std::vector<C> v(degree + 1);
    v[degree] = std::move(coeff);
    return BasicPolynomial(std::move(v));
  }
  /// The indeterminate `a`.
  static BasicPolynomial variable() { return monomial(C(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<C>& coefficients() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }
  C constant_term() const { return (*this)[0]; }

  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + coefficient_cast<T>(*it);
    return acc;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial x, const BasicPolynomial& y) { return x += y; }
  friend BasicPolynomial operator-(BasicPolynomial x, const BasicPolynomial& y) { return x -= y; }

  friend BasicPolynomial operator*(const BasicPolynomial& x, const BasicPolynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<C> out(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (ppt::is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
    }
    return BasicPolynomial(std::move(out));
  }

  BasicPolynomial scaled(const C& s) const {
    if (ppt::is_zero(s)) return {};
    BasicPolynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  friend bool operator==(const BasicPolynomial& x, const BasicPolynomial& y) { return x.c_ == y.c_; }

  std::string to_string(const std::string& var = "a") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (ppt::is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && ppt::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using IntPolynomial = BasicPolynomial<Integer>;
using Polynomial = BasicPolynomial<Rational>;

template <typename C>
bool is_zero(const BasicPolynomial<C>& p) {
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Integer polynomials

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IntPolynomial divide_coefficients(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> v = p.coefficients();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(v));
}

/// Content-free with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  if (g == 1) return p;
  return divide_coefficients(p, g);
}

/// Quotient q with p = q * d; throws inexact_division otherwise.
inline IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw division_by_zero();
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw inexact_division();
  std::vector<Integer> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const std::size_t dn = dc.size();
  std::vector<Integer> q(rem.size() - dn + 1);
  const Integer& lc = dc.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + dn - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw inexact_division();
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t i = 0; i < dn; ++i) mpz_submul(rem[k + i].get_mpz_t(), q[k].get_mpz_t(), dc[i].get_mpz_t());
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw inexact_division();
  return IntPolynomial(std::move(q));
}

inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  try {
    (void)divide_exact(p, d);
    return true;
  } catch (const inexact_division&) {
    return false;
  }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const Integer& lc = bc.back();
  int rd = a.degree();
  const int bd = b.degree();
  while (rd >= bd) {
    if (sgn(r[static_cast<std::size_t>(rd)]) == 0) {
      r.pop_back();
      --rd;
      continue;
    }
    const Integer top = r[static_cast<std::size_t>(rd)];
    for (auto& c : r) c *= lc;
    const std::size_t shift = static_cast<std::size_t>(rd - bd);
    for (std::size_t i = 0; i < bc.size(); ++i) mpz_submul(r[shift + i].get_mpz_t(), top.get_mpz_t(), bc[i].get_mpz_t());
    r.pop_back();
    --rd;
  }
  return IntPolynomial(std::move(r));
}

namespace detail {

inline Integer max_norm(const IntPolynomial& p) {
  Integer m = 0;
  for (const auto& c : p.coefficients())
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

// Primitive polynomial remainder sequence; inputs primitive, nonzero.
inline IntPolynomial gcd_prs(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the candidate back off its balanced xi-adic digits. A candidate dividing
// both inputs is the gcd.
inline bool gcd_heuristic(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& out) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer va = a.evaluate(xi);
    const Integer vb = b.evaluate(xi);
    if (sgn(va) != 0 && sgn(vb) != 0) {
      Integer h;
      mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      std::vector<Integer> digits;
      const Integer half = xi / 2;
      while (sgn(h) != 0) {
        Integer d;
        mpz_mod(d.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        if (d > half) d -= xi;
        digits.push_back(d);
        h -= d;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      }
      IntPolynomial cand = primitive_part(IntPolynomial(std::move(digits)));
      if (!cand.is_zero() && divides(cand, a) && divides(cand, b)) {
        out = std::move(cand);
        return true;
      }
    }
    Integer s;
    mpz_sqrt(s.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    xi = (xi * s * 73794) / 27011 + 1;
  }
  return false;
}

}  // namespace detail

/// Greatest common divisor, primitive with positive leading coefficient.
/// gcd(0, 0) is the zero polynomial.
inline IntPolynomial gcd(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero()) return primitive_part(y);
  if (y.is_zero()) return primitive_part(x);
  if (x.degree() == 0 || y.degree() == 0) return IntPolynomial(Integer(1));
  IntPolynomial a = primitive_part(x);
  IntPolynomial b = primitive_part(y);
  if (a == b) return a;
  if (a.degree() == 1 && divides(a, b)) return a;
  if (b.degree() == 1 && divides(b, a)) return b;
  IntPolynomial g;
  if (detail::gcd_heuristic(a, b, g)) return g;
  return detail::gcd_prs(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Rational polynomials

inline Polynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return Polynomial(std::move(v));
}

/// Splits p = scale * P with P primitive integer (positive leading
/// coefficient). Zero maps to (0, 0).
inline std::pair<Rational, IntPolynomial> primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), IntPolynomial()};
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    Integer n = c.num_ref() * l;
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), c.den_ref().get_mpz_t());
    v.push_back(std::move(n));
  }
  IntPolynomial ip(std::move(v));
  Integer g = content(ip);
  if (sgn(ip.leading()) < 0) g = -g;
  return {Rational(g, l), divide_coefficients(ip, g)};
}

/// Polynomial long division over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw division_by_zero();
  if (p.degree() < d.degree()) return {Polynomial(), p};
  std::vector<Rational> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const std::size_t dn = dc.size();
  std::vector<Rational> q(rem.size() - dn + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational& top = rem[k + dn - 1];
    if (top.is_zero()) continue;
    q[k] = top / dc.back();
    for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= q[k] * dc[i];
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

inline Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw inexact_division();
  return q;
}

/// gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient (content 1).
inline Polynomial gcd(const Polynomial& x, const Polynomial& y) {
  return to_rational(gcd(primitive_integer(x).second, primitive_integer(y).second));
}

enum class PolyOp { add, sub, mul, gcd, divide_exact };

inline Polynomial poly_arith(PolyOp op, const Polynomial& p, const Polynomial& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::gcd: return gcd(p, q);
    case PolyOp::divide_exact: return divide_exact(p, q);
  }
  return {};
}

}  // namespace ppt
