// Copyright 2026 The qwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qwc {

/// Shapes of the operands do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A NaN or infinity reached an operation that refuses to propagate it.
class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's mathematical precondition (unitarity, skewadjointness,
/// positivity of h, ...) does not hold to the required tolerance.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested toy Fock space exceeds the configured dimension cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A generator that can only be realised through an external dilation
/// (coefficient block not of the form -L*W).
class DilationRequiredError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwc
