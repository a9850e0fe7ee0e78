#pragma once

#include <stdexcept>
#include <string>

namespace tacsim {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (bad ids, empty inputs, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A text document (full log, replay, results, config) failed to parse.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The match engine was handed a decision it cannot apply.
class EngineError : public Error {
 public:
  using Error::Error;
};

}  // namespace tacsim
