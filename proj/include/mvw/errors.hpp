#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvw {

enum class ErrorKind {
  associativity_violation,
  identity_violation,
  range_error,
  size_budget_exceeded,
  cap_exceeded,
  class_budget_exceeded,
  assignment_budget_exceeded,
  generation_budget_exceeded,
  parse_error,
  format_error,
  letter_absent,
  unbound_variable,
  precondition_failed,
  alignment_order_mismatch,
  chain_step_mismatch,
  usage_error,
  internal_error,
};

const char* error_kind_name(ErrorKind kind);

/// Whether the error means "a configured search budget ran out" rather than
/// bad input or a violated property. The CLI maps these to exit code 3.
bool is_budget_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a quotient construction hits its class cap; carries the
/// number of classes discovered before giving up.
class ClassBudgetError : public Error {
 public:
  ClassBudgetError(std::size_t classes_found, const std::string& message)
      : Error(ErrorKind::class_budget_exceeded, message),
        classes_found_(classes_found) {}

  std::size_t classes_found() const { return classes_found_; }

 private:
  std::size_t classes_found_;
};

class AssociativityError : public Error {
 public:
  AssociativityError(int x, int y, int z, const std::string& message)
      : Error(ErrorKind::associativity_violation, message), x_(x), y_(y), z_(z) {}

  int x() const { return x_; }
  int y() const { return y_; }
  int z() const { return z_; }

 private:
  int x_, y_, z_;
};

}  // namespace mvw
