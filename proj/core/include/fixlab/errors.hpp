// Copyright 2026 The fixlab Authors
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

namespace fixlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or non-finite input, failed Hermitian gate, bad argument range.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

// Matrix expected to be positive semidefinite has an eigenvalue below -psd_tol.
class NotPsdError : public InputError {
 public:
  using InputError::InputError;
};

// An operation's hypotheses (unitality, completeness, commutation) are unmet.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical routine could not meet its own residual gate.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fixlab
