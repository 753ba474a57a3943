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

#include "unruh/correlations.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "unruh/physics.h"

using namespace unruh;
using namespace unruh::testing;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix bell_state() {
    const double h = 1 / std::sqrt(2.0);
    return DensityMatrix::from_pure(StateVector{h, 0, 0, h});
}

DensityMatrix random_product() {
    return DensityMatrix(tensor(random_density(2).matrix(), random_density(2).matrix()));
}

// 2 max(0, |rho_{00,11}| - sqrt(rho_{01,01} rho_{10,10})), plus the other anti-diagonal
// pair, for states with only X-shaped support.
double x_state_concurrence(const DensityMatrix &rho) {
    double a = std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
    double b = std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
    return 2 * std::max({0.0, a, b});
}

double shared_f_max(double r) {
    double c = std::cos(r);
    return 0.5 * (1 + (2 * c + c * c) / 3);
}

DensityMatrix local_rotate(const DensityMatrix &rho) {
    auto u = tensor(random_unitary(2), random_unitary(2));
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace

TEST(correlations, decompose_examples) {
    auto bell = decompose(bell_state());
    for (size_t i = 0; i < 3; i++) {
        EXPECT_NEAR(bell.local_a[i], 0, 1e-15);
        EXPECT_NEAR(bell.local_b[i], 0, 1e-15);
        for (size_t j = 0; j < 3; j++) {
            double expected = i != j ? 0 : (i == 1 ? -1 : 1);
            EXPECT_NEAR(bell.gamma[i][j], expected, 1e-15);
        }
    }

    auto mixed = decompose(DensityMatrix::maximally_mixed(4));
    for (size_t i = 0; i < 3; i++) {
        EXPECT_EQ(mixed.local_a[i], 0);
        EXPECT_EQ(mixed.local_b[i], 0);
        for (size_t j = 0; j < 3; j++) {
            EXPECT_EQ(mixed.gamma[i][j], 0);
        }
    }
    EXPECT_THROW(decompose(DensityMatrix::maximally_mixed(2)), DimensionError);
}

TEST(correlations, decompose_reconstructs_random_states) {
    for (int trial = 0; trial < 100; trial++) {
        auto rho = random_density(4);
        auto d = decompose(rho);
        EXPECT_LE(max_abs_diff(d.reconstruct(), rho.matrix()), 1e-12);
        for (const auto &row : d.gamma) {
            for (double g : row) {
                EXPECT_LE(std::abs(g), 1 + 1e-12);
            }
        }
    }
}

TEST(correlations, shared_state_correlation_spectrum) {
    for (int i = 0; i <= 50; i++) {
        double r = (kPi / 4) * i / 50.0;
        double c2 = std::cos(r) * std::cos(r);
        auto mu = correlation_spectrum(shared_state(r));
        EXPECT_NEAR(mu[0], c2, 1e-12);
        EXPECT_NEAR(mu[1], c2, 1e-12);
        EXPECT_NEAR(mu[2], c2 * c2, 1e-12);
    }
}

TEST(correlations, bell_B_closed_form) {
    double previous = 3;
    for (int i = 0; i < 100; i++) {
        double r = (kPi / 4) * i / 99.0;
        double c = std::cos(r);
        double b = bell_B(shared_state(r));
        EXPECT_NEAR(b, 2 * c * c, 1e-10);
        EXPECT_LT(b, previous);
        previous = b;
    }
    EXPECT_NEAR(bell_B(shared_state(kPi / 4)), 1, 1e-12);
}

TEST(correlations, bell_B_product_states_never_violate) {
    for (int trial = 0; trial < 500; trial++) {
        EXPECT_LE(bell_B(random_product()), 1 + 1e-12);
    }
}

TEST(correlations, concurrence_examples) {
    EXPECT_NEAR(concurrence(bell_state()), 1, 1e-7);
    for (int trial = 0; trial < 50; trial++) {
        EXPECT_NEAR(concurrence(random_product()), 0, 1e-7);
    }
}

TEST(correlations, concurrence_matches_x_state_oracle) {
    for (int i = 0; i < 100; i++) {
        double r = (kPi / 4) * i / 99.0;
        auto rho = shared_state(r);
        double oracle = x_state_concurrence(rho);
        EXPECT_NEAR(oracle, std::cos(r), 1e-15);
        EXPECT_NEAR(concurrence(rho), oracle, 1e-10) << "r=" << r;
    }
    EXPECT_GT(concurrence(shared_state(kPi / 4)), 0.7);
}

TEST(correlations, concurrence_generic_x_states) {
    for (int trial = 0; trial < 100; trial++) {
        std::array<double, 4> p{uniform(0, 1), uniform(0, 1), uniform(0, 1), uniform(0, 1)};
        double total = p[0] + p[1] + p[2] + p[3];
        for (auto &x : p) {
            x /= total;
        }
        ComplexMatrix m = ComplexMatrix::diagonal(p);
        m(0, 3) = std::polar(uniform(0, 1) * std::sqrt(p[0] * p[3]), uniform(0, 6));
        m(3, 0) = std::conj(m(0, 3));
        m(1, 2) = std::polar(uniform(0, 1) * std::sqrt(p[1] * p[2]), uniform(0, 6));
        m(2, 1) = std::conj(m(1, 2));
        DensityMatrix rho(m);
        EXPECT_NEAR(concurrence(rho), x_state_concurrence(rho), 1e-7);
    }
}

TEST(correlations, f_max_closed_form) {
    for (int i = 0; i < 100; i++) {
        double r = (kPi / 4) * i / 99.0;
        EXPECT_NEAR(f_max(shared_state(r)), shared_f_max(r), 1e-12);
    }
    EXPECT_NEAR(f_max(shared_state(0)), 1, 1e-15);
    EXPECT_NEAR(f_max(shared_state(kPi / 4)), 0.819035593728849175, 1e-12);
    EXPECT_NEAR(f_max(DensityMatrix::maximally_mixed(4)), 0.5, 1e-15);
}

TEST(correlations, mutual_information_examples) {
    EXPECT_NEAR(mutual_information(bell_state()), 2, 1e-10);
    EXPECT_NEAR(mutual_information(random_product()), 0, 1e-10);
    // S(A) = 1, S(R) = h(1/4), S(AR) = H(1/4, 3/4): I = 1 exactly at r = pi/4.
    EXPECT_NEAR(mutual_information(shared_state(kPi / 4)), 1, 1e-12);
}

TEST(correlations, qmid_examples) {
    auto dephased = dephase_in_marginal_bases(bell_state());
    EXPECT_LE(max_abs_diff(dephased.matrix(), ComplexMatrix::diagonal({0.5, 0, 0, 0.5})), 1e-15);
    EXPECT_NEAR(qmid(bell_state()), 1, 1e-10);
    for (int trial = 0; trial < 50; trial++) {
        EXPECT_NEAR(qmid(random_product()), 0, 1e-9);
    }
    // 1 + h(1/2)/2 - h(1/4) at r = pi/4.
    EXPECT_NEAR(qmid(shared_state(kPi / 4)), 0.688721875540867136, 1e-12);
}

TEST(correlations, qmid_nonnegative_on_random_states) {
    for (int trial = 0; trial < 200; trial++) {
        auto rho = random_density(4);
        EXPECT_GE(qmid(rho), -1e-10);
        EXPECT_GE(mutual_information(rho), -1e-10);
    }
}

TEST(correlations, qmid_positive_across_unruh_sweep) {
    for (int i = 1; i <= 100; i++) {
        double r = (kPi / 4) * i / 100.0;
        auto report = measure_report(shared_state(r));
        EXPECT_GT(report.qmid, 0);
        EXPECT_GT(report.concurrence, 0);
        EXPECT_GT(report.f_max, 2.0 / 3);
    }
}

TEST(correlations, local_unitary_invariance) {
    for (int trial = 0; trial < 100; trial++) {
        auto rho = trial % 2 ? random_density(4) : shared_state(uniform(0, kPi / 4));
        auto rotated = local_rotate(rho);
        EXPECT_NEAR(bell_B(rho), bell_B(rotated), 1e-9);
        EXPECT_NEAR(concurrence(rho), concurrence(rotated), 1e-9);
        EXPECT_NEAR(f_max(rho), f_max(rotated), 1e-9);
        EXPECT_NEAR(mutual_information(rho), mutual_information(rotated), 1e-9);
    }
}

TEST(correlations, report_ranges) {
    for (int trial = 0; trial < 100; trial++) {
        auto m = measure_report(random_density(4));
        EXPECT_GE(m.concurrence, 0);
        EXPECT_LE(m.concurrence, 1);
        EXPECT_GE(m.f_max, 0);
        EXPECT_LE(m.f_max, 1 + 1e-12);
        EXPECT_GE(m.bell_B, 0);
        EXPECT_LE(m.bell_B, 2 + 1e-12);
        EXPECT_GE(m.qmid, -1e-10);
    }
}

TEST(correlations, teleport_ideal_and_depolarized) {
    auto ideal = teleport_fidelity_mc(bell_state(), 2000, 1);
    EXPECT_NEAR(ideal.mean, 1, std::max(3 * ideal.standard_error, 1e-12));
    EXPECT_EQ(ideal.corrections, (std::array<int, 4>{0, 3, 1, 2}));

    auto noise = teleport_fidelity_mc(DensityMatrix::maximally_mixed(4), 20000, 2);
    EXPECT_NEAR(noise.mean, 0.5, 3 * noise.standard_error + 1e-12);
}

TEST(correlations, teleport_matches_f_max_for_unruh_states) {
    for (double r : {0.2, 0.5, kPi / 4}) {
        auto rho = shared_state(r);
        auto mc = teleport_fidelity_mc(rho, 20000, 7);
        EXPECT_NEAR(mc.mean, f_max(rho), 3 * mc.standard_error + 1e-12) << "r=" << r;
    }
}

TEST(correlations, teleport_bounded_by_f_max) {
    for (int trial = 0; trial < 10; trial++) {
        auto rho = random_density(4);
        auto mc = teleport_fidelity_mc(rho, 5000, trial);
        EXPECT_LE(mc.mean, f_max(rho) + 4 * mc.standard_error);
    }
}

TEST(correlations, teleport_is_seeded) {
    auto rho = shared_state(0.4);
    EXPECT_EQ(teleport_fidelity_mc(rho, 1000, 42).mean, teleport_fidelity_mc(rho, 1000, 42).mean);
    EXPECT_NE(teleport_fidelity_mc(rho, 1000, 42).mean, teleport_fidelity_mc(rho, 1000, 43).mean);
    EXPECT_THROW(teleport_fidelity_mc(rho, 0, 1), PreconditionError);
}
