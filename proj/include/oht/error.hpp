#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x < 0, alpha >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or out-of-range algorithm parameter (n, N, a, N1, m).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied function returned a non-finite value.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, std::size_t node)
      : Error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
  explicit EvalError(const std::string& what) : Error(what) {}

  /// Index of the offending quadrature/interpolation node, if known.
  [[nodiscard]] std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_ = static_cast<std::size_t>(-1);
};

/// The banded moment system could not be factored.
class SolveError : public Error {
 public:
  using Error::Error;
};

/// A reference computation failed to reach its accuracy target.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Unknown oscilland label.
class NotRegistered : public Error {
 public:
  using Error::Error;
};

}  // namespace oht
