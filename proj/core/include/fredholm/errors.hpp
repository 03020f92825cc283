#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fredholm {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed expressions, problem files, out-of-range arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure while solving an otherwise well-formed problem.
class SolverError : public Error {
 public:
  using Error::Error;
};

// --- expressions -----------------------------------------------------------

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public InputError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : InputError("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        name_(name),
        offset_(offset) {}
  const std::string& name() const noexcept { return name_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

/// Real evaluation left the domain of an operation (log of nonpositive, ...).
/// The offset locates the offending node in the source text.
class DomainError : public SolverError {
 public:
  DomainError(const std::string& reason, std::size_t offset)
      : SolverError(reason + " (expression offset " + std::to_string(offset) + ")"), reason_(reason), offset_(offset) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

class MissingBinding : public InputError {
 public:
  using InputError::InputError;
};

// --- basis / quadrature / ranges --------------------------------------------

class InvalidInterval : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class DegreeOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class OrderOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class OutOfInterval : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

// --- solving ----------------------------------------------------------------

class SingularSystem : public SolverError {
 public:
  using SolverError::SolverError;
};

/// LU breakdown: the selected pivot fell at or below the pivot tolerance.
class SingularMatrix : public SingularSystem {
 public:
  explicit SingularMatrix(std::size_t column)
      : SingularSystem("singular matrix: no usable pivot in column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class ExactPathUnavailable : public SolverError {
 public:
  using SolverError::SolverError;
};

// --- problem files / builtins ----------------------------------------------

class MissingKey : public InputError {
 public:
  explicit MissingKey(const std::string& key) : InputError("missing key '" + key + "'"), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class DuplicateKey : public InputError {
 public:
  DuplicateKey(const std::string& key, std::size_t line)
      : InputError("duplicate key '" + key + "' on line " + std::to_string(line)), key_(key), line_(line) {}
  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

class ExpressionError : public InputError {
 public:
  ExpressionError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BadInterval : public InputError {
 public:
  using InputError::InputError;
};

class UnknownBuiltin : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace fredholm
