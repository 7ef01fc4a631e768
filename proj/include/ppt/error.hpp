#pragma once

#include <stdexcept>
#include <string>

namespace ppt {

// Base of every error raised by the library. Derived types let callers
// (and the CLI exit-code mapping) distinguish failure classes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
 public:
  division_by_zero() : error("division by zero") {}
};

// Exact division requested but the divisor does not divide the dividend.
class inexact_division : public error {
 public:
  inexact_division() : error("divisor does not divide dividend exactly") {}
};

class domain_error : public error {
 public:
  using error::error;
};

// A product of two expressions that both depend on the pending unknown.
class nonlinear_unknown : public error {
 public:
  nonlinear_unknown() : error("product of two expressions carrying the pending unknown") {}
};

class nonzero_constant_term : public error {
 public:
  nonzero_constant_term() : error("shift-down requires a vanishing constant term") {}
};

class degenerate_stage : public error {
 public:
  degenerate_stage(int stage, std::string expression)
      : error("degenerate elimination stage " + std::to_string(stage) +
              ": condition has zero slope (" + expression + ")"),
        stage_(stage),
        expression_(std::move(expression)) {}

  int stage() const noexcept { return stage_; }
  const std::string& expression() const noexcept { return expression_; }

 private:
  int stage_;
  std::string expression_;
};

class order_guard_exceeded : public error {
 public:
  order_guard_exceeded(int requested, int limit)
      : error("requested order " + std::to_string(requested) + " exceeds the configured limit " +
              std::to_string(limit)) {}
};

class vanishing_alpha : public error {
 public:
  explicit vanishing_alpha(int index)
      : error("matrix element alpha_" + std::to_string(index) + " vanishes"), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Numerical failure inside one of the independent solvers.
class numerical_error : public error {
 public:
  using error::error;
};

}  // namespace ppt
