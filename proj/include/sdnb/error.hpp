#pragma once

#include <stdexcept>
#include <string>

namespace sdnb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input shape: non-prime p, unsupported degree, malformed polynomial.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The requested self-dual basis cannot exist.
class ExistenceError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a partial operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class NonUnitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Working precision too small for the requested output.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// An assertion that the mathematics guarantees has failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define SDNB_CHECK(cond, msg)                                              \
  do {                                                                     \
    if (!(cond)) throw ::sdnb::InternalError(std::string("check failed: ") \
                                             + (msg));                     \
  } while (0)

}  // namespace sdnb
