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

#ifndef UNRUH_QMAT_H
#define UNRUH_QMAT_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "unruh/errors.h"

namespace unruh {

using Complex = std::complex<double>;

/// Largest matrix dimension supported by the dense kernels (three qubits).
constexpr size_t kMaxDim = 8;

/// Tolerances shared by the state validators.
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;
/// Eigenvalues above -kSqrtClamp are treated as roundoff and zeroed.
constexpr double kSqrtClamp = 1e-8;

/// Dense row-major complex square matrix with 1 <= dim <= kMaxDim.
class ComplexMatrix {
   public:
    ComplexMatrix() : ComplexMatrix(1) {
    }
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    /// max_{ij} |m_ij - m*_ji|
    double hermitian_defect() const;
    bool is_hermitian(double tol = kHermitianTol) const {
        return hermitian_defect() <= tol;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    std::string str() const;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Pure state amplitudes in the computational basis.
using StateVector = std::vector<Complex>;

/// |v><v|
ComplexMatrix outer(std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// Hermitian, unit-trace, positive semidefinite matrix. Validated on construction.
class DensityMatrix {
   public:
    /// Throws InvalidStateError if any invariant fails.
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(std::span<const Complex> amplitudes);
    static DensityMatrix maximally_mixed(size_t dim);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    size_t dim() const {
        return m_.dim();
    }
    const Complex &operator()(size_t row, size_t col) const {
        return m_(row, col);
    }

   private:
    ComplexMatrix m_;
};

struct EigenDecomposition {
    /// Descending.
    std::vector<double> eigenvalues;
    /// Column i is the unit eigenvector for eigenvalues[i].
    ComplexMatrix eigenvectors;

    StateVector eigenvector(size_t i) const;
};

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// Index 0 -> x, 1 -> y, 2 -> z.
ComplexMatrix sigma(size_t axis);
}  // namespace pauli

/// Kronecker product. Basis |j>_a|k>_b maps to index j*dim_b + k.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
StateVector tensor(std::span<const Complex> a, std::span<const Complex> b);

/// Traces out subsystem `traced_index` (0 is the leftmost tensor factor).
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const size_t> subsystem_dims, size_t traced_index);
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> subsystem_dims, size_t traced_index);
DensityMatrix partial_trace(
    const DensityMatrix &rho, std::initializer_list<size_t> subsystem_dims, size_t traced_index);

/// Cyclic complex Jacobi diagonalization. Eigenvalues descending, each eigenvector
/// phase-fixed so its first component with modulus above 1e-10 is real positive.
EigenDecomposition eig_hermitian(const ComplexMatrix &m);

/// Singular values, descending, by one-sided (Hestenes) Jacobi on the columns. Small
/// singular values keep absolute accuracy near machine epsilon times the matrix norm.
std::vector<double> singular_values(const ComplexMatrix &m);

/// Principal square root of a positive semidefinite matrix.
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix &rho);
/// Shannon entropy in bits of a probability list; non-positive entries contribute 0.
double shannon_entropy(std::span<const double> probabilities);

}  // namespace unruh

#endif
