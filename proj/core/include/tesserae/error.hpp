#pragma once

#include <stdexcept>
#include <string>

namespace tesserae {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unusable tile description.
class TileError : public Error {
 public:
  using Error::Error;
};

// A strip admits no tilings of any positive length.
class NoTilingsError : public Error {
 public:
  using Error::Error;
};

// Input outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive computation refused because the instance is too large.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Numerical or algebraic procedure failed to reach a verified answer.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tesserae
