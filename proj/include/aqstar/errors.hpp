#pragma once

#include <stdexcept>
#include <string>

namespace aqstar {

// Base of every error raised by the library. Input-validation errors and
// broken mathematical invariants are kept apart so the CLI can map the
// former to a usage error and the latter to a check failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiscriminant : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  using Error::Error;
};

class ZeroIdeal : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class NotIntegrallyClosed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BothZero : public Error {
 public:
  using Error::Error;
};

// A containment that holds as a theorem was found to fail: always a bug.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

// An internal cross-check between two routes to the same value disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace aqstar
