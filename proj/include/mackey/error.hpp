#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown group name, bad file, invalid flag combination.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a desk-scale guard (group order, module dim, search cap).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// The coefficient field does not contain the eigenvalues a computation needs.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

/// An internal consistency certificate failed. Always indicates a bug or a
/// violated mathematical hypothesis, never bad user input.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace mackey
