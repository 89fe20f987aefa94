// Copyright 2026 The nmpt Authors
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

namespace nmpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input is not a physical state or channel beyond the clamping tolerance.
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied configuration (plan files, CLI flags, arguments).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An algorithm failed to produce a usable answer (rank deficiency,
/// optimizer exhaustion, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nmpt
