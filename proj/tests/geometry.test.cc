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

#include "gtest/gtest.h"
#include "test_util.h"
#include "unruh/channels.h"

using namespace unruh;
using namespace unruh::testing;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_near(const BlochVector &a, const BlochVector &b, double tol) {
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
    EXPECT_NEAR(a.z, b.z, tol);
}

}  // namespace

TEST(geometry, bloch_of_examples) {
    expect_near(bloch_of(DensityMatrix(ComplexMatrix::diagonal({1, 0}))), {0, 0, 1}, 0);
    expect_near(bloch_of(DensityMatrix::maximally_mixed(2)), {0, 0, 0}, 0);
    expect_near(bloch_of(DensityMatrix(ComplexMatrix::diagonal({0.25, 0.75}))), {0, 0, -0.5}, 1e-15);
    EXPECT_THROW(bloch_of(DensityMatrix::maximally_mixed(4)), DimensionError);
}

TEST(geometry, pure_state_bloch_convention) {
    for (int trial = 0; trial < 100; trial++) {
        double theta = uniform(0, kPi);
        double phi = uniform(0, 2 * kPi);
        auto b = bloch_of(pure_qubit_state(theta, phi));
        expect_near(b, {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)}, 1e-14);
    }
}

TEST(geometry, image_of_pure_examples) {
    for (double phi : {0.0, 1.0, 5.0}) {
        expect_near(image_of_pure(0, phi, kPi / 4), {0, 0, 0}, 1e-15);
        expect_near(image_of_pure(kPi, phi, kPi / 4), {0, 0, -1}, 1e-15);
    }
    expect_near(image_of_pure(kPi / 2, 0, kPi / 4), {1 / std::sqrt(2.0), 0, -0.5}, 1e-15);
    EXPECT_THROW(image_of_pure(-0.1, 0, 0.1), DomainError);
    EXPECT_THROW(image_of_pure(0.1, 2 * kPi, 0.1), DomainError);
    EXPECT_THROW(image_of_pure(0.1, 0, 1), DomainError);
}

TEST(geometry, asymptotic_image_matches_bloch_surface_formula) {
    for (int trial = 0; trial < 200; trial++) {
        double theta = uniform(0, kPi);
        double phi = uniform(0, 2 * kPi);
        double half = std::sin(theta / 2);
        BlochVector expected{std::cos(phi) * std::sin(theta) / std::sqrt(2.0),
                             std::sin(phi) * std::sin(theta) / std::sqrt(2.0), -half * half};
        expect_near(image_of_pure(theta, phi, kPi / 4), expected, 1e-15);
    }
}

TEST(geometry, closed_form_matches_channel_action) {
    for (int trial = 0; trial < 10000; trial++) {
        double theta = uniform(0, kPi);
        double phi = uniform(0, 2 * kPi);
        double r = uniform(0, kPi / 4);
        auto direct = bloch_of(apply(unruh_kraus(r), pure_qubit_state(theta, phi)));
        expect_near(image_of_pure(theta, phi, r), direct, 1e-12);
    }
}

TEST(geometry, south_pole_osculates) {
    for (int i = 0; i <= 50; i++) {
        double r = (kPi / 4) * i / 50.0;
        expect_near(image_of_pure(kPi, 0.7, r), {0, 0, -1}, 1e-15);
    }
}

TEST(geometry, maximally_mixed_image_is_pole_midpoint) {
    for (int i = 0; i <= 50; i++) {
        double r = (kPi / 4) * i / 50.0;
        auto map = unruh_kraus(r);
        auto mixed = bloch_of(apply(map, DensityMatrix::maximally_mixed(2)));
        auto north = bloch_of(apply(map, DensityMatrix(ComplexMatrix::diagonal({1, 0}))));
        auto south = bloch_of(apply(map, DensityMatrix(ComplexMatrix::diagonal({0, 1}))));
        expect_near(mixed, {(north.x + south.x) / 2, (north.y + south.y) / 2, (north.z + south.z) / 2}, 1e-12);
    }
}

TEST(geometry, radius_from_center_examples) {
    EXPECT_NEAR(radius_from_center(kPi / 2), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(radius_from_center(0), 0.5, 1e-15);
    EXPECT_NEAR(radius_from_center(kPi), 0.5, 1e-15);
    EXPECT_NEAR(radius_from_center(kPi / 3), 0.661437827766147648, 1e-15);
    for (int trial = 0; trial < 200; trial++) {
        double theta = uniform(0, kPi);
        double phi = uniform(0, 2 * kPi);
        double distance = (image_of_pure(theta, phi, kPi / 4) - BlochVector{0, 0, -0.5}).norm();
        EXPECT_NEAR(radius_from_center(theta), distance, 1e-14);
    }
}

TEST(geometry, spheroid_asymptotic) {
    auto report = spheroid_report(kPi / 4, 10000);
    expect_near(report.center, {0, 0, -0.5}, 1e-15);
    EXPECT_NEAR(report.semi_axis_equatorial, 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(report.semi_axis_polar, 0.5, 1e-15);
    EXPECT_NEAR(report.eccentricity, 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(report.volume_fraction, 0.25, 1e-6);
    // Absolute image volume pi / 3.
    EXPECT_NEAR(report.volume_fraction * 4 * kPi / 3, kPi / 3, 1e-6);
}

TEST(geometry, spheroid_identity) {
    auto report = spheroid_report(0, 1000);
    expect_near(report.center, {0, 0, 0}, 1e-15);
    EXPECT_NEAR(report.eccentricity, 0, 1e-7);
    EXPECT_NEAR(report.volume_fraction, 1, 1e-9);
}

TEST(geometry, spheroid_general_r_against_channel_samples) {
    double r = kPi / 6;
    auto report = spheroid_report(r, 10000);
    expect_near(report.center, {0, 0, -0.25}, 1e-15);
    EXPECT_NEAR(report.semi_axis_equatorial, std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(report.semi_axis_polar, 0.75, 1e-15);
    // Ellipsoid volume ratio (equatorial^2 * polar) = cos^4 r = 9/16.
    EXPECT_NEAR(report.volume_fraction, 9.0 / 16, 1e-9);
    // Every channel output lies on the spheroid surface.
    for (int trial = 0; trial < 500; trial++) {
        double theta = uniform(0, kPi);
        double phi = uniform(0, 2 * kPi);
        auto p = bloch_of(apply(unruh_kraus(r), pure_qubit_state(theta, phi))) - report.center;
        double eq = report.semi_axis_equatorial;
        double po = report.semi_axis_polar;
        EXPECT_NEAR((p.x * p.x + p.y * p.y) / (eq * eq) + p.z * p.z / (po * po), 1, 1e-12);
    }
}

TEST(geometry, spheroid_rejects_coarse_quadrature) {
    EXPECT_THROW(spheroid_report(0.2, 99), PreconditionError);
}

TEST(geometry, sample_surface_layout) {
    auto points = sample_surface(kPi / 4, 9, 12);
    ASSERT_EQ(points.size(), 9u * 12u);
    expect_near(points.front().point, {0, 0, 0}, 1e-15);
    expect_near(points.back().point, {0, 0, -1}, 1e-15);
    for (const auto &p : points) {
        EXPECT_NEAR((p.point - BlochVector{0, 0, -0.5}).norm(), radius_from_center(p.theta), 1e-10);
    }
    for (const auto &p : sample_surface(0, 7, 5)) {
        EXPECT_NEAR(p.point.norm(), 1, 1e-15);
    }
    EXPECT_THROW(sample_surface(0.1, 1, 4), PreconditionError);
}
