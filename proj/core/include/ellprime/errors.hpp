#pragma once

#include <stdexcept>
#include <string>

namespace ellprime {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument fell outside a documented resource guard (sieve limit,
// factorization range, scan bound, ...).
class BoundsError : public Error {
 public:
  explicit BoundsError(const std::string& what) : Error(what) {}
};

// An argument violated a mathematical precondition (composite modulus,
// off-curve point, singular curve, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Reduction mod p is singular (p | discriminant) or the characteristic is
// unsupported (p = 2, 3).
class BadReductionError : public DomainError {
 public:
  explicit BadReductionError(const std::string& what) : DomainError(what) {}
};

// A scan cache does not belong to the requested curve or does not cover the
// requested bound.
class CacheError : public Error {
 public:
  explicit CacheError(const std::string& what) : Error(what) {}
};

}  // namespace ellprime
