#pragma once

#include <stdexcept>
#include <string>

namespace fibpoly {

/// A precondition on an index or exponent was violated (e.g. n = 0 where a
/// closed form is only stated for n >= 1).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An exact division left a nonzero remainder. Every division in the library
/// is asserted exact, so this means the identity being evaluated is false.
class NotDivisible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation paths disagreed.
class IdentityViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fibpoly
