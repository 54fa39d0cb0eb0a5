// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_ERRORS_HPP
#define Z2Z4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z2z4 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands with different (gamma, delta).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (vectors, matrix files, grids).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid parameters for a builder or an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A builder could not find a column it must delete.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Two independent engines produced different answers for the same question.
class EngineDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace z2z4

#endif  // Z2Z4_ERRORS_HPP
