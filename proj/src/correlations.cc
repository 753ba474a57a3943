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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace unruh {

namespace {

// Eigenvalues of rho at or below this are treated as outside its support.
constexpr double kSupportTol = 1e-14;

void require_two_qubit(const DensityMatrix &rho, const char *op) {
    if (rho.dim() != 4) {
        throw DimensionError(std::string(op) + ": expected a two-qubit (4x4) state");
    }
}

// Projectors onto the eigenbasis of a qubit marginal.
std::array<ComplexMatrix, 2> marginal_projectors(const ComplexMatrix &marginal) {
    auto eig = eig_hermitian(marginal);
    if (eig.eigenvalues[0] - eig.eigenvalues[1] < kDegenerateGap) {
        return {ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})};
    }
    return {outer(eig.eigenvector(0)), outer(eig.eigenvector(1))};
}

// (<b| (x) I) full (|b> (x) I) for a 4-dim |b> on the first two of three qubits.
ComplexMatrix conditional_state(const StateVector &bell, const ComplexMatrix &full) {
    ComplexMatrix out(2);
    for (size_t x = 0; x < 4; x++) {
        if (bell[x] == Complex{0, 0}) {
            continue;
        }
        for (size_t y = 0; y < 4; y++) {
            if (bell[y] == Complex{0, 0}) {
                continue;
            }
            Complex w = std::conj(bell[x]) * bell[y];
            for (size_t r = 0; r < 2; r++) {
                for (size_t rp = 0; rp < 2; rp++) {
                    out(r, rp) += w * full(x * 2 + r, y * 2 + rp);
                }
            }
        }
    }
    return out;
}

double expectation(const StateVector &psi, const ComplexMatrix &m) {
    Complex total = 0;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            total += std::conj(psi[i]) * m(i, j) * psi[j];
        }
    }
    return total.real();
}

}  // namespace

ComplexMatrix TwoQubitDecomposition::reconstruct() const {
    const auto id = ComplexMatrix::identity(2);
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (size_t i = 0; i < 3; i++) {
        m += tensor(pauli::sigma(i), id) * Complex{local_a[i], 0};
        m += tensor(id, pauli::sigma(i)) * Complex{local_b[i], 0};
        for (size_t j = 0; j < 3; j++) {
            m += tensor(pauli::sigma(i), pauli::sigma(j)) * Complex{gamma[i][j], 0};
        }
    }
    return m * Complex{0.25, 0};
}

TwoQubitDecomposition decompose(const DensityMatrix &rho) {
    require_two_qubit(rho, "decompose");
    const auto id = ComplexMatrix::identity(2);
    const auto &m = rho.matrix();
    TwoQubitDecomposition result{};
    for (size_t i = 0; i < 3; i++) {
        result.local_a[i] = (m * tensor(pauli::sigma(i), id)).trace().real();
        result.local_b[i] = (m * tensor(id, pauli::sigma(i))).trace().real();
        for (size_t j = 0; j < 3; j++) {
            result.gamma[i][j] = (m * tensor(pauli::sigma(i), pauli::sigma(j))).trace().real();
        }
    }
    return result;
}

Vec3 correlation_spectrum(const DensityMatrix &rho) {
    auto g = decompose(rho).gamma;
    ComplexMatrix gram(3);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            double acc = 0;
            for (size_t k = 0; k < 3; k++) {
                acc += g[k][i] * g[k][j];
            }
            gram(i, j) = acc;
        }
    }
    auto eig = eig_hermitian(gram);
    Vec3 mu{};
    for (size_t i = 0; i < 3; i++) {
        mu[i] = std::max(0.0, eig.eigenvalues[i]);
    }
    return mu;
}

double bell_B(const DensityMatrix &rho) {
    auto mu = correlation_spectrum(rho);
    return mu[0] + mu[1];
}

double concurrence(const DensityMatrix &rho) {
    require_two_qubit(rho, "concurrence");
    // With rho = W W^dag over its support, the square roots of the eigenvalues of
    // sqrt(rho) (Y rho* Y) sqrt(rho) are the singular values of W^T Y W, Y = sigma_y (x) sigma_y.
    // Working from W avoids taking square roots of roundoff-level eigenvalues.
    auto eig = eig_hermitian(rho.matrix());
    std::vector<StateVector> support;
    for (size_t i = 0; i < 4; i++) {
        if (eig.eigenvalues[i] > kSupportTol) {
            auto v = eig.eigenvector(i);
            double scale = std::sqrt(eig.eigenvalues[i]);
            for (auto &x : v) {
                x *= scale;
            }
            support.push_back(std::move(v));
        }
    }
    auto yy = tensor(pauli::y(), pauli::y());
    ComplexMatrix tau(support.size());
    for (size_t i = 0; i < support.size(); i++) {
        for (size_t j = 0; j < support.size(); j++) {
            Complex acc = 0;
            for (size_t k = 0; k < 4; k++) {
                for (size_t l = 0; l < 4; l++) {
                    acc += support[i][k] * yy(k, l) * support[j][l];
                }
            }
            tau(i, j) = acc;
        }
    }
    std::array<double, 4> lambda{};
    auto sv = singular_values(tau);
    std::copy(sv.begin(), sv.end(), lambda.begin());
    double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

double f_max(const DensityMatrix &rho) {
    auto mu = correlation_spectrum(rho);
    double trace_norm = std::sqrt(mu[0]) + std::sqrt(mu[1]) + std::sqrt(mu[2]);
    return 0.5 * (1 + trace_norm / 3);
}

MonteCarloFidelity teleport_fidelity_mc(const DensityMatrix &rho, size_t samples, uint64_t seed) {
    require_two_qubit(rho, "teleport_fidelity_mc");
    if (samples == 0) {
        throw PreconditionError("teleport_fidelity_mc: samples must be >= 1");
    }
    const double h = 1 / std::sqrt(2.0);
    const std::array<StateVector, 4> bell{
        StateVector{h, 0, 0, h},
        StateVector{h, 0, 0, -h},
        StateVector{0, h, h, 0},
        StateVector{0, h, -h, 0},
    };
    const std::array<ComplexMatrix, 4> paulis{pauli::i2(), pauli::x(), pauli::y(), pauli::z()};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // contributions[s][k][v]: q_k <psi| V rho_k V^dag |psi> for sample s.
    std::vector<std::array<std::array<double, 4>, 4>> contributions(samples);
    std::array<std::array<double, 4>, 4> totals{};
    for (size_t s = 0; s < samples; s++) {
        double theta = std::acos(1 - 2 * unit(rng));
        double phi = 2 * std::numbers::pi * unit(rng);
        StateVector psi{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
        auto full = tensor(outer(psi), rho.matrix());
        for (size_t k = 0; k < 4; k++) {
            auto rob = conditional_state(bell[k], full);
            for (size_t v = 0; v < 4; v++) {
                double f = expectation(psi, paulis[v] * rob * paulis[v].adjoint());
                contributions[s][k][v] = f;
                totals[k][v] += f;
            }
        }
    }

    std::array<int, 4> best{};
    double best_total = -1;
    for (int assignment = 0; assignment < 256; assignment++) {
        std::array<int, 4> v{assignment & 3, (assignment >> 2) & 3, (assignment >> 4) & 3, (assignment >> 6) & 3};
        double total = 0;
        for (size_t k = 0; k < 4; k++) {
            total += totals[k][v[k]];
        }
        if (total > best_total) {
            best_total = total;
            best = v;
        }
    }

    double n = static_cast<double>(samples);
    double mean = best_total / n;
    double sq = 0;
    for (const auto &c : contributions) {
        double f = 0;
        for (size_t k = 0; k < 4; k++) {
            f += c[k][best[k]];
        }
        sq += (f - mean) * (f - mean);
    }
    double standard_error = samples > 1 ? std::sqrt(sq / (n - 1) / n) : 0.0;
    return MonteCarloFidelity{mean, standard_error, best};
}

double mutual_information(const DensityMatrix &rho) {
    require_two_qubit(rho, "mutual_information");
    auto a = partial_trace(rho, {2, 2}, 1);
    auto b = partial_trace(rho, {2, 2}, 0);
    return von_neumann_entropy(a) + von_neumann_entropy(b) - von_neumann_entropy(rho);
}

DensityMatrix dephase_in_marginal_bases(const DensityMatrix &rho) {
    require_two_qubit(rho, "dephase_in_marginal_bases");
    const std::array<size_t, 2> dims{2, 2};
    auto pa = marginal_projectors(partial_trace(rho.matrix(), dims, 1));
    auto pb = marginal_projectors(partial_trace(rho.matrix(), dims, 0));
    ComplexMatrix out(4);
    for (const auto &x : pa) {
        for (const auto &y : pb) {
            auto p = tensor(x, y);
            out += p * rho.matrix() * p;
        }
    }
    return DensityMatrix(std::move(out));
}

double qmid(const DensityMatrix &rho) {
    return mutual_information(rho) - mutual_information(dephase_in_marginal_bases(rho));
}

MeasureReport measure_report(const DensityMatrix &rho) {
    return MeasureReport{bell_B(rho), concurrence(rho), f_max(rho), qmid(rho), mutual_information(rho)};
}

}  // namespace unruh
