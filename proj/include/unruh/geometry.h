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

#ifndef UNRUH_GEOMETRY_H
#define UNRUH_GEOMETRY_H

#include <vector>

#include "unruh/qmat.h"

namespace unruh {

struct BlochVector {
    double x;
    double y;
    double z;

    double norm() const;
    BlochVector operator-(const BlochVector &other) const {
        return {x - other.x, y - other.y, z - other.z};
    }
    bool operator==(const BlochVector &other) const = default;
};

/// The image of the Bloch sphere is a spheroid with equal x/y semi-axes.
struct SpheroidReport {
    BlochVector center;
    double semi_axis_equatorial;
    double semi_axis_polar;
    double eccentricity;
    /// Image volume over the Bloch-ball volume 4 pi / 3, by Simpson quadrature.
    double volume_fraction;
};

struct SurfacePoint {
    double theta;
    double phi;
    BlochVector point;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, whose Bloch vector is
/// (sin theta cos phi, sin theta sin phi, cos theta).
DensityMatrix pure_qubit_state(double theta, double phi);

BlochVector bloch_of(const DensityMatrix &rho);

/// Bloch vector of the Unruh channel applied to pure_qubit_state(theta, phi):
/// (cos r sin theta cos phi, cos r sin theta sin phi, cos 2r cos^2(theta/2) - sin^2(theta/2)).
BlochVector image_of_pure(double theta, double phi, double r);

/// Distance of the asymptotic (r = pi/4) image point at polar angle theta from the
/// image of the maximally mixed state: sqrt(3 - cos 2 theta) / (2 sqrt 2).
double radius_from_center(double theta);

SpheroidReport spheroid_report(double r, size_t integration_steps = 10000);

/// n_theta polar angles spanning [0, pi] inclusive by n_phi azimuths in [0, 2 pi),
/// theta-major.
std::vector<SurfacePoint> sample_surface(double r, size_t n_theta, size_t n_phi);

}  // namespace unruh

#endif
