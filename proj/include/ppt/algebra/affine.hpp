#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ppt/error.hpp"

namespace ppt {

/// constant + slope * u for the single pending unknown u. Products are only
/// defined when at least one factor is independent of u.
template <typename C>
class Affine {
 public:
  Affine() = default;
  Affine(C constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  Affine(int constant) : constant_(C(constant)) {}  // NOLINT(google-explicit-constructor)
  Affine(C constant, C slope) : constant_(std::move(constant)), slope_(std::move(slope)) {}

  /// The unknown itself, 0 + 1*u.
  static Affine unknown() { return Affine(C(0), C(1)); }

  const C& constant() const noexcept { return constant_; }
  const C& slope() const noexcept { return slope_; }
  bool depends_on_unknown() const { return !is_zero(slope_); }

  C substitute(const C& u) const { return constant_ + slope_ * u; }

  /// Root of constant + slope*u = 0; throws when slope vanishes.
  C solve_zero(int stage) const {
    if (is_zero(slope_)) {
      std::ostringstream os;
      os << constant_ << " + 0*u";
      throw degenerate_stage(stage, os.str());
    }
    return -(constant_ / slope_);
  }

  Affine operator-() const { return Affine(-constant_, -slope_); }

  friend Affine operator+(const Affine& x, const Affine& y) {
    return Affine(x.constant_ + y.constant_, x.slope_ + y.slope_);
  }
  friend Affine operator-(const Affine& x, const Affine& y) {
    return Affine(x.constant_ - y.constant_, x.slope_ - y.slope_);
  }
  friend Affine operator*(const Affine& x, const Affine& y) {
    const bool xs = x.depends_on_unknown();
    const bool ys = y.depends_on_unknown();
    if (xs && ys) throw nonlinear_unknown();
    if (xs) return Affine(x.constant_ * y.constant_, x.slope_ * y.constant_);
    if (ys) return Affine(x.constant_ * y.constant_, x.constant_ * y.slope_);
    return Affine(x.constant_ * y.constant_);
  }
  /// Division by an expression independent of u.
  friend Affine operator/(const Affine& x, const Affine& y) {
    if (y.depends_on_unknown()) throw nonlinear_unknown();
    return Affine(x.constant_ / y.constant_, x.slope_ / y.constant_);
  }

  friend bool operator==(const Affine& x, const Affine& y) {
    return x.constant_ == y.constant_ && x.slope_ == y.slope_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Affine& a) {
    return os << a.constant_ << " + (" << a.slope_ << ")*u";
  }

 private:
  C constant_{};
  C slope_{};
};

template <typename C>
bool is_zero(const Affine<C>& x) {
  return is_zero(x.constant()) && is_zero(x.slope());
}

enum class AffineOp { add, sub, mul };

template <typename C>
Affine<C> affine_arith(AffineOp op, const Affine<C>& x, const Affine<C>& y) {
  switch (op) {
    case AffineOp::add: return x + y;
    case AffineOp::sub: return x - y;
    case AffineOp::mul: return x * y;
  }
  return x;
}

}  // namespace ppt
