#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lerch {

// Root of every error raised by the library. The CLI maps all of these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the evaluation domain failed (|w| >= 1, Re w >= 1/2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The shift lies within 1e-12 of a forbidden value {-1, -2, ...}, or a lemma
// parameter beta is a nonpositive integer.
class InvalidShift : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Requested tolerance is below what binary64 can certify.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t would_enumerate)
      : Error(what), count_(would_enumerate) {}
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

}  // namespace lerch
