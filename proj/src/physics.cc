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

#include "unruh/physics.h"

#include <cmath>
#include <string>

namespace unruh {

void check_bogoliubov_angle(double r) {
    if (!(r >= 0 && r <= kMaxBogoliubovAngle + 1e-12)) {
        throw DomainError("Bogoliubov angle r = " + std::to_string(r) + " outside [0, pi/4]");
    }
}

double cos_r(double acceleration, double omega) {
    if (!(acceleration > 0) || !(omega > 0)) {
        throw DomainError("cos_r requires acceleration > 0 and omega > 0");
    }
    return 1 / std::sqrt(std::exp(-2 * std::numbers::pi * omega / acceleration) + 1);
}

double unruh_temperature(double acceleration) {
    if (!(acceleration > 0)) {
        throw DomainError("unruh_temperature requires acceleration > 0");
    }
    return acceleration / (2 * std::numbers::pi);
}

UnruhParams UnruhParams::from_acceleration(double acceleration, double omega) {
    return UnruhParams{acceleration, omega, std::acos(cos_r(acceleration, omega))};
}

StateVector three_mode_state(double r) {
    check_bogoliubov_angle(r);
    const double h = 1 / std::sqrt(2.0);
    StateVector psi(8, Complex{0, 0});
    psi[0b000] = h * std::cos(r);
    psi[0b011] = h * std::sin(r);
    psi[0b110] = h;
    return psi;
}

DensityMatrix shared_state(double r) {
    check_bogoliubov_angle(r);
    double c = std::cos(r);
    double s = std::sin(r);
    ComplexMatrix m(4);
    m(0, 0) = c * c / 2;
    m(0, 3) = c / 2;
    m(3, 0) = c / 2;
    m(1, 1) = s * s / 2;
    m(3, 3) = 0.5;
    return DensityMatrix(std::move(m));
}

}  // namespace unruh
