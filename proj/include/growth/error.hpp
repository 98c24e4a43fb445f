#ifndef GROWTH_ERROR_HPP
#define GROWTH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace growth {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NoRootIsolated : public Error {
 public:
  using Error::Error;
};

class NotSquareFree : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The defining polynomial is reducible and the element shares a factor with it.
/// `factor()` is that factor, printed low-to-high.
class NotInvertible : public Error {
 public:
  NotInvertible(const std::string& what, std::string factor)
      : Error(what + " (common factor " + factor + ")"), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

class EmptySystem : public Error {
 public:
  using Error::Error;
};

class LevelBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DeterminismViolation : public ParseError {
 public:
  using ParseError::ParseError;
};

class UndeclaredState : public ParseError {
 public:
  using ParseError::ParseError;
};

class NoLeafRule : public Error {
 public:
  using Error::Error;
};

class MultipleHoles : public Error {
 public:
  using Error::Error;
};

class NoRealRoot : public Error {
 public:
  using Error::Error;
};

class NegativeEntry : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class AuditFailure : public Error {
 public:
  AuditFailure(const std::string& what, int k) : Error(what), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

}  // namespace growth

#endif  // GROWTH_ERROR_HPP
