#pragma once

#include <stdexcept>
#include <string>

namespace tetrabox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch, non-square input, or a size beyond the dimension guard.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text, JSON, or specification data.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a mathematical precondition (zero parameter, duplicate eigenvalues, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Module is reducible where an irreducible one is required.
class ReducibleError : public Error {
 public:
  using Error::Error;
};

/// Spectra are not of the form {c, c-2, ..., c-2d}, or the type is not (0,0) where required.
class ModuleTypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace tetrabox
