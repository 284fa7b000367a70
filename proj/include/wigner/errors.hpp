#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Structurally impossible input: negative momentum, a projection not offset
/// from its momentum by an integer, wrong arity, division by zero. Distinct
/// from a selection-rule zero, which is a legal result.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (CLI tokens, batch lines, exact strings).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A broken internal invariant, e.g. a half-integer phase exponent surviving
/// the selection rules.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wigner
