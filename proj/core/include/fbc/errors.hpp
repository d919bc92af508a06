#pragma once

#include <stdexcept>
#include <string>

namespace fbc {

/// Input that cannot be turned into a configuration at all.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntactically broken document; carries the byte offset when known.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed document describing an impossible object
/// (overlapping blocks, non-bijective action, missing degree, ...).
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// A valid object that lacks a property the requested operation needs.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotTypeSError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fbc
