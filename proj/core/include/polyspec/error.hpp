#pragma once

#include <stdexcept>
#include <string>

namespace polyspec {

/// Input that violates a documented precondition (malformed edge list,
/// disconnected graph, inconsistent spectrum, bad parameter).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested explicit construction exceeds its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the library itself guarantees did not hold
/// (multiplicity ledger mismatch, root isolation failure, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polyspec
