#pragma once

#include <stdexcept>
#include <string>

namespace appendlab {

// Error taxonomy used across the library:
//   SpecError    - caller violated a documented precondition (bad argument, empty corpus, ...)
//   ShapeError   - tensor/sequence dimensions do not line up
//   NumericError - non-finite value surfaced where a finite one is required
//   ParseError   - malformed file or container
//   UsageError   - command-line misuse (maps to exit code 1)

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SpecError : public Error {
 public:
  explicit SpecError(const std::string& msg) : Error(msg) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace appendlab
