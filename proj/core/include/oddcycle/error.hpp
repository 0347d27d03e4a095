#pragma once

#include <stdexcept>
#include <string>

namespace oddcycle {

// Caller supplied something outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to handle an instance beyond its cap.
class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Polynomial reduction exceeded its step budget.
class ReductionDidNotTerminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace oddcycle
