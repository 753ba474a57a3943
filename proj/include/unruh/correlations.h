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

#ifndef UNRUH_CORRELATIONS_H
#define UNRUH_CORRELATIONS_H

#include <array>
#include <cstdint>

#include "unruh/qmat.h"

namespace unruh {

/// Two marginal eigenvalues closer than this are treated as degenerate, and the
/// computational basis is used as that marginal's measurement basis.
constexpr double kDegenerateGap = 1e-9;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// rho = (1/4)[I + (a.sigma) (x) I + I (x) (b.sigma) + sum_ij gamma_ij sigma_i (x) sigma_j]
struct TwoQubitDecomposition {
    Vec3 local_a;
    Vec3 local_b;
    Mat3 gamma;

    ComplexMatrix reconstruct() const;
};

struct MeasureReport {
    double bell_B;
    double concurrence;
    double f_max;
    double qmid;
    double mutual_information;
};

struct MonteCarloFidelity {
    double mean;
    double standard_error;
    /// Pauli correction index (0 = I, 1 = X, 2 = Y, 3 = Z) for each Bell outcome
    /// Phi+, Phi-, Psi+, Psi-.
    std::array<int, 4> corrections;
};

TwoQubitDecomposition decompose(const DensityMatrix &rho);

/// Eigenvalues of Gamma^T Gamma, descending.
Vec3 correlation_spectrum(const DensityMatrix &rho);

/// Sum of the two largest eigenvalues of Gamma^T Gamma. CHSH is violable iff > 1.
double bell_B(const DensityMatrix &rho);

/// Wootters concurrence, conjugation taken in the computational basis.
double concurrence(const DensityMatrix &rho);

/// (1/2)(1 + Tr sqrt(Gamma^T Gamma) / 3).
double f_max(const DensityMatrix &rho);

/// Average teleportation fidelity over Haar-random inputs using rho as the resource.
/// Alice measures her input and her half of rho in the Bell basis; each outcome's Pauli
/// correction is chosen by exhaustive search over all 256 assignments.
MonteCarloFidelity teleport_fidelity_mc(const DensityMatrix &rho, size_t samples, uint64_t seed);

/// S(A) + S(B) - S(AB), bits.
double mutual_information(const DensityMatrix &rho);

/// Dephases rho in the product of the marginal eigenbases.
DensityMatrix dephase_in_marginal_bases(const DensityMatrix &rho);

/// Measurement-induced disturbance I(rho) - I(Pi(rho)), bits.
double qmid(const DensityMatrix &rho);

MeasureReport measure_report(const DensityMatrix &rho);

}  // namespace unruh

#endif
