// Copyright 2026 The vtlssi Authors. All Rights Reserved.
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

namespace vtlssi {

// Error taxonomy shared by every module. The CLI maps any of these to a
// nonzero exit code and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside a mathematical domain (e.g. negative frequency).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid parameter set: bad axis bounds, sample rate too low, Nyquist
// violations in synthesis, too few speakers for exclusion trials.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or mismatched data: axis mismatch, short signals, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

// Data that is well-formed but carries no usable information (flat
// spectrum, zero variance, all-identical shifts).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace vtlssi
