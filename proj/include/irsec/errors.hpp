// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.

#pragma once

#include <stdexcept>
#include <string>

namespace irsec {

/// Rejected argument: bad dimensions, NaN entries, out-of-range parameters.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The right-hand matrix of a generalized eigenproblem is not positive definite.
class SingularPencilError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative routine could not reach its contract (e.g. bracket expansion failed).
class NumericalFailureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search was refused because it would exceed the evaluation guard.
class RefusedSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scan found no sign change in the requested interval.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be written or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irsec
