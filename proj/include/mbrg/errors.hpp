#pragma once

#include <stdexcept>
#include <string>

namespace mbrg {

/// Input that violates an operation's precondition (bad indices, bad family
/// parameters, malformed pairings).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Metric and game operations require a connected graph.
class NotConnected : public InvalidInput {
 public:
  NotConnected() : InvalidInput("graph is not connected") {}
};

/// An exhaustive search would exceed its configured feasibility bound. Distinct
/// from a negative answer: the result is unknown, not "none".
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mbrg
