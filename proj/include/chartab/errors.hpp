#pragma once

#include <stdexcept>
#include <string>

namespace chartab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group spec, cycle notation, JSON document or CLI value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (enumeration cap, cyclotomic order, prime search) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input failed: division by zero, group
/// mismatch, a class function that is not a character, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Generator images that do not define a group homomorphism.
class HomomorphismError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal consistency check of the table construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chartab
