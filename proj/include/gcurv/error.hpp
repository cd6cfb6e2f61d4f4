#pragma once

#include <stdexcept>
#include <string>

namespace gcurv {

/// Malformed textual input (adjacency matrices, rationals, dimensions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certificate or cross-check that must hold by construction failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gcurv
