#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace nabla {

/// Validation failure with a machine-readable code and a human-readable
/// witness description. Thrown by constructors whose preconditions are
/// structural (bad tables, size caps); expected mathematical failures are
/// returned through Result instead.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Value-or-error sum. E carries the witness of the failed condition.
template <class T, class E>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(E error) : v_(std::move(error)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Result: access to missing value");
    return std::get<0>(v_);
  }
  T& value() {
    if (!ok()) throw std::logic_error("Result: access to missing value");
    return std::get<0>(v_);
  }
  const E& error() const {
    if (ok()) throw std::logic_error("Result: access to missing error");
    return std::get<1>(v_);
  }

 private:
  std::variant<T, E> v_;
};

}  // namespace nabla
