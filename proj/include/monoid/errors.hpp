#pragma once

#include <stdexcept>
#include <string>

namespace monoid {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic: a division that every formula guarantees to be exact was not.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class ClassificationFailure : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidSupport : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotJIrreducible : public Error {
 public:
  using Error::Error;
};

class NonPrimeModulus : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace monoid
