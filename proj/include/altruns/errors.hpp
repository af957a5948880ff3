#pragma once

#include <stdexcept>

namespace altruns {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A structural identity that must hold did not. Never expected to fire.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace altruns
