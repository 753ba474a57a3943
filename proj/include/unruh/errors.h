// Copyright 2026 The Unruh Channel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNRUH_ERRORS_H
#define UNRUH_ERRORS_H

#include <stdexcept>

namespace unruh {

/// Mismatched or unsupported matrix / subsystem dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A physical parameter (acceleration, angle, damping) outside its domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input violates an operation precondition (e.g. non-Hermitian eigensolver input).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix failed the density-matrix invariants.
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Eigenvalue below the PSD clamping threshold.
struct NotPsdError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Iterative routine failed to converge, or a map is singular.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace unruh

#endif
