#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arterm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation would exceed the configured integer size budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The recurrence produced a term that is not an integer.
class NonIntegerTermError : public Error {
 public:
  NonIntegerTermError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class AllZeroSequenceError : public Error {
 public:
  using Error::Error;
};

/// A synthesized term disagreed with the recurrence oracle.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace arterm
