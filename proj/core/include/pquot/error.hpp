#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pquot {

/// Base class for every error raised by the library. The message is the
/// user-facing text; the CLI prints it verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: unsupported sizes, malformed expressions, violated
/// preconditions of a public constructor.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Expression parse failure; `position` is the byte offset of the offending
/// character in the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation could not be completed (non-isolated zeros, resolution that
/// does not terminate, field extension refused, ...).
class ComputeError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug or a counterexample worth
/// reporting, never an input problem.
class ConsistencyError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace pquot
