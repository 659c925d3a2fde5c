#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace presclass {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family parameter or option is outside its documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A constructed multiplication fails a group axiom.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

// Text input (descriptor, element expression, presentation) failed to parse.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Permutation closure grew past the configured cap.
class ClosureLimitError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (e.g. disconnected graph).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A scale guard (sequence length, group order, vertex count) refused the input.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Coset enumeration needed more cosets than allowed.
class EnumerationExceeded : public Error {
 public:
  EnumerationExceeded(std::size_t max_cosets);

  std::size_t max_cosets() const { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

}  // namespace presclass
