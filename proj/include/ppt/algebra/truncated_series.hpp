#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt {

/// Power series in the coupling lambda, truncated at an explicit order K:
/// exactly K+1 coefficients c_0..c_K. Binary operations truncate to the
/// smaller operand order and never report terms beyond it.
///
/// C must default-construct to zero, be constructible from int, and provide
/// ring operations plus a free is_zero().
template <typename C>
class TruncatedSeries {
 public:
  using coefficient_type = C;

  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw domain_error("truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(C value, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  /// The series "lambda" (0 + 1*lambda) at the given order.
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const std::vector<C>& coefficients() const noexcept { return c_; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }
  const C& constant_term() const { return c_.front(); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw domain_error("cannot extend a truncated series");
    return TruncatedSeries(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  template <typename F>
  auto map(F&& f) const {
    using R = decltype(f(c_[0]));
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return TruncatedSeries<R>(std::move(out));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    const std::size_t n = std::min(x.c_.size(), y.c_.size());
    std::vector<C> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x.c_[i] + y.c_[i];
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
    const std::size_t n = std::min(x.c_.size(), y.c_.size());
    std::vector<C> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x.c_[i] - y.c_[i];
    return TruncatedSeries(std::move(out));
  }

  /// Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    const std::size_t n = std::min(x.c_.size(), y.c_.size());
    std::vector<C> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (is_zero(y.c_[j])) continue;
        out[i + j] = out[i + j] + x.c_[i] * y.c_[j];
      }
    }
    return TruncatedSeries(std::move(out));
  }

  // Scalar operations act on the constant term (+, -) or on every term (*).
  friend TruncatedSeries operator+(TruncatedSeries x, const C& s) {
    x.c_[0] = x.c_[0] + s;
    return x;
  }
  friend TruncatedSeries operator-(TruncatedSeries x, const C& s) {
    x.c_[0] = x.c_[0] - s;
    return x;
  }
  friend TruncatedSeries operator*(TruncatedSeries x, const C& s) {
    for (auto& c : x.c_) c = c * s;
    return x;
  }
  friend TruncatedSeries operator*(const C& s, TruncatedSeries x) { return std::move(x) * s; }

  TruncatedSeries scale(const C& s) const { return *this * s; }

  /// Divides by lambda: requires c_0 == 0 and lowers the order by one.
  TruncatedSeries shift_down() const {
    if (!is_zero(c_[0])) throw nonzero_constant_term();
    if (c_.size() == 1) throw domain_error("shift-down of an order-0 series leaves no coefficients");
    return TruncatedSeries(std::vector<C>(c_.begin() + 1, c_.end()));
  }

  /// Multiplicative inverse; requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (is_zero(c_[0])) throw division_by_zero();
    const C inv0 = C(1) / c_[0];
    std::vector<C> out(c_.size());
    out[0] = inv0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      C acc{};
      for (std::size_t i = 1; i <= k; ++i) acc = acc + c_[i] * out[k - i];
      out[k] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator/(const TruncatedSeries& x, const TruncatedSeries& y) { return x * y.inverse(); }

  /// Horner evaluation at lambda = x in the value type T.
  template <typename T, typename Convert>
  T evaluate(const T& x, Convert&& convert) const {
    T acc = convert(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + convert(c_[k]);
    return acc;
  }
  C evaluate(const C& x) const {
    return evaluate(x, [](const C& c) { return c; });
  }

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) { return x.c_ == y.c_; }

  std::string to_string(const std::string& var = "lambda") const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << " + ";
      os << "[" << c_[i] << "]";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    os << " + O(" << var << "^" << c_.size() << ")";
    return os.str();
  }

 private:
  std::vector<C> c_;
};

enum class SeriesOp { add, sub, mul, scale, shift_down };

/// Dispatching form; `scale` multiplies s by the constant term of t and
/// `shift_down` ignores t.
template <typename C>
TruncatedSeries<C> series_arith(SeriesOp op, const TruncatedSeries<C>& s, const TruncatedSeries<C>& t) {
  switch (op) {
    case SeriesOp::add: return s + t;
    case SeriesOp::sub: return s - t;
    case SeriesOp::mul: return s * t;
    case SeriesOp::scale: return s * t.constant_term();
    case SeriesOp::shift_down: return s.shift_down();
  }
  return s;
}

}  // namespace ppt
