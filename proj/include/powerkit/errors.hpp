// Copyright 2026 powerkit contributors
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

#ifndef POWERKIT_ERRORS_HPP
#define POWERKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powerkit {

/// Invalid input: malformed games or files, unattainable quotas, negative
/// weights, mismatched player lists.
class InvalidInputError : public std::runtime_error {
  public:
    explicit InvalidInputError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Structurally valid request that exceeds a documented size limit of the
/// chosen algorithm (e.g. exhaustive enumeration beyond n = 30).
class CapabilityError : public std::runtime_error {
  public:
    explicit CapabilityError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Numerical procedure failed to converge or verify (econometrics, solver
/// internal checks).
class ComputationError : public std::runtime_error {
  public:
    explicit ComputationError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace powerkit

#endif  // POWERKIT_ERRORS_HPP
