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

#ifndef UNRUH_PHYSICS_H
#define UNRUH_PHYSICS_H

#include <numbers>

#include "unruh/qmat.h"

/// Fermionic Unruh model for a single Dirac mode, in natural units (hbar = c = k_B = 1).
namespace unruh {

constexpr double kMaxBogoliubovAngle = std::numbers::pi / 4;

/// Throws DomainError unless 0 <= r <= pi/4 (with 1e-12 slack at the upper end).
void check_bogoliubov_angle(double r);

/// cos r = 1 / sqrt(exp(-2 pi omega / a) + 1). Lies in (1/sqrt 2, 1], decreasing in a.
double cos_r(double acceleration, double omega);

/// Unruh temperature a / (2 pi).
double unruh_temperature(double acceleration);

struct UnruhParams {
    double acceleration;
    double omega;
    /// Bogoliubov angle in [0, pi/4).
    double r;

    static UnruhParams from_acceleration(double acceleration, double omega);
};

/// Alice's mode plus Rob's two Rindler modes, ordered |A>|I>|II>:
///   (cos r |000> + sin r |011> + |110>) / sqrt 2.
StateVector three_mode_state(double r);

/// Alice-Rob state after tracing Rindler region II:
///   (1/2)[cos^2 r |00><00| + cos r (|00><11| + |11><00|) + sin^2 r |01><01| + |11><11|].
DensityMatrix shared_state(double r);

}  // namespace unruh

#endif
