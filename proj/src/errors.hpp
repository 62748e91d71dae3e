#pragma once

#include <stdexcept>
#include <string>

namespace omc {

/// Failure categories; the numeric values double as CLI exit codes.
enum class ErrorKind : int {
  Invalid = 1,
  Parse = 2,
  Guard = 3,
  Mismatch = 4,
  Domain = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed textual input (matrix, digraph, permutation, polytope files).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

/// A desk-scale size limit was exceeded.
struct GuardError : Error {
  explicit GuardError(const std::string& what) : Error(ErrorKind::Guard, what) {}
};

/// Two independent computations of the same quantity disagree.
struct MismatchError : Error {
  explicit MismatchError(const std::string& what)
      : Error(ErrorKind::Mismatch, what) {}
};

/// A mathematical precondition does not hold for the given input.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

}  // namespace omc
