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

#include "unruh/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "unruh/channels.h"
#include "unruh/physics.h"

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angles(double theta, double phi) {
    if (!(theta >= 0 && theta <= kPi)) {
        throw DomainError("theta = " + std::to_string(theta) + " outside [0, pi]");
    }
    if (!(phi >= 0 && phi < 2 * kPi)) {
        throw DomainError("phi = " + std::to_string(phi) + " outside [0, 2 pi)");
    }
}

// Slice area times |dz/dtheta| for the image solid.
double volume_integrand(double theta, double r) {
    auto p = image_of_pure(theta, 0, r);
    double c = std::cos(r);
    double dz_dtheta = -c * c * std::sin(theta);
    return kPi * (p.x * p.x + p.y * p.y) * std::abs(dz_dtheta);
}

}  // namespace

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

DensityMatrix pure_qubit_state(double theta, double phi) {
    StateVector psi{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
    return DensityMatrix::from_pure(psi);
}

BlochVector bloch_of(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw DimensionError("bloch_of: expected a qubit state");
    }
    const auto &m = rho.matrix();
    return BlochVector{
        (m * pauli::x()).trace().real(),
        (m * pauli::y()).trace().real(),
        (m * pauli::z()).trace().real(),
    };
}

BlochVector image_of_pure(double theta, double phi, double r) {
    check_angles(theta, phi);
    check_bogoliubov_angle(r);
    double c = std::cos(r);
    double half_c = std::cos(theta / 2);
    double half_s = std::sin(theta / 2);
    return BlochVector{
        c * std::sin(theta) * std::cos(phi),
        c * std::sin(theta) * std::sin(phi),
        std::cos(2 * r) * half_c * half_c - half_s * half_s,
    };
}

double radius_from_center(double theta) {
    if (!(theta >= 0 && theta <= kPi)) {
        throw DomainError("theta outside [0, pi]");
    }
    return std::sqrt(3 - std::cos(2 * theta)) / (2 * std::sqrt(2.0));
}

SpheroidReport spheroid_report(double r, size_t integration_steps) {
    check_bogoliubov_angle(r);
    if (integration_steps < 100) {
        throw PreconditionError("spheroid_report: integration_steps must be >= 100");
    }
    size_t steps = integration_steps + (integration_steps % 2);

    auto map = unruh_kraus(r);
    BlochVector center = bloch_of(apply(map, DensityMatrix::maximally_mixed(2)));
    BlochVector north = image_of_pure(0, 0, r);
    BlochVector south = image_of_pure(kPi, 0, r);
    BlochVector equator = image_of_pure(kPi / 2, 0, r);
    double polar = (north.z - south.z) / 2;
    double equatorial = (equator - center).norm();

    double shorter = std::min(polar, equatorial);
    double longer = std::max(polar, equatorial);
    double eccentricity = std::sqrt(std::max(0.0, 1 - (shorter / longer) * (shorter / longer)));

    double h = kPi / static_cast<double>(steps);
    double sum = volume_integrand(0, r) + volume_integrand(kPi, r);
    for (size_t i = 1; i < steps; i++) {
        sum += (i % 2 ? 4.0 : 2.0) * volume_integrand(h * static_cast<double>(i), r);
    }
    double volume = sum * h / 3;
    double unit_ball = 4 * kPi / 3;

    return SpheroidReport{center, equatorial, polar, eccentricity, volume / unit_ball};
}

std::vector<SurfacePoint> sample_surface(double r, size_t n_theta, size_t n_phi) {
    check_bogoliubov_angle(r);
    if (n_theta < 2 || n_phi < 2) {
        throw PreconditionError("sample_surface: n_theta and n_phi must be >= 2");
    }
    std::vector<SurfacePoint> points;
    points.reserve(n_theta * n_phi);
    for (size_t i = 0; i < n_theta; i++) {
        double theta = i + 1 == n_theta ? kPi : kPi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
        for (size_t j = 0; j < n_phi; j++) {
            double phi = 2 * kPi * static_cast<double>(j) / static_cast<double>(n_phi);
            points.push_back({theta, phi, image_of_pure(theta, phi, r)});
        }
    }
    return points;
}

}  // namespace unruh
