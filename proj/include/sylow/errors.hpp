#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylow {

// Root of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in rings of different arity (or a substitution list has
// the wrong shape).
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was asked to run past its configured size guard
// (exhaustive enumeration depth, graph size, ball radius).
class GuardViolation : public Error {
 public:
  using Error::Error;
};

// Depth below the minimum the operation is defined for.
class DepthTooSmall : public Error {
 public:
  using Error::Error;
};

// A stated precondition does not hold (e.g. extending a base that already
// has a commuting pair).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Structural rejection of a would-be diagonal base.
class ValidationError : public Error {
 public:
  enum class Kind {
    FirstCoordinateNotOne,
    MissingFullMonomial,
    CoordinateArityMismatch,
    WrongCoordinateCount,
  };

  ValidationError(Kind kind, unsigned index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  // 1-based generator index the rejection refers to (0 when not applicable).
  unsigned index() const { return index_; }

 private:
  Kind kind_;
  unsigned index_;
};

// Text input (poly grammar, base files, characteristic vectors) that does
// not parse; carries the 1-based line number when reading a file.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A runtime-checked mathematical invariant failed.  Reaching this means the
// library itself is wrong, not the caller.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace sylow
