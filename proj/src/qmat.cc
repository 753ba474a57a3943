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

#include "unruh/qmat.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace unruh {

namespace {

constexpr double kJacobiOffDiagonalTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPhaseFixTol = 1e-10;

void check_dim(size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw DimensionError("matrix dimension " + std::to_string(dim) + " outside [1, 8]");
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

double frobenius_sq(const ComplexMatrix &m) {
    double total = 0;
    for (const auto &v : m.entries()) {
        total += std::norm(v);
    }
    return total;
}

double off_diagonal_frobenius(const ComplexMatrix &m) {
    double total = 0;
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) {
            if (i != j) {
                total += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(total);
}

// Lexicographic "greater" on (real, imag) of each component.
bool lex_greater(const ComplexMatrix &vecs, size_t a, size_t b) {
    for (size_t k = 0; k < vecs.dim(); k++) {
        const auto &x = vecs(k, a);
        const auto &y = vecs(k, b);
        if (x.real() != y.real()) {
            return x.real() > y.real();
        }
        if (x.imag() != y.imag()) {
            return x.imag() > y.imag();
        }
    }
    return false;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_() {
    check_dim(dim);
    entries_.assign(dim * dim, Complex{0, 0});
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != dim * dim) {
        throw DimensionError("entry count does not equal dim^2");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    check_dim(dim_);
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("matrix rows must all have length dim");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix result(dim);
    for (size_t i = 0; i < dim; i++) {
        result(i, i) = 1;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix result(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        result(i, i) = values[i];
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            result(j, i) = std::conj((*this)(i, j));
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix result(*this);
    for (auto &v : result.entries_) {
        v = std::conj(v);
    }
    return result;
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t i = 0; i < dim_; i++) {
        total += (*this)(i, i);
    }
    return total;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &v : entries_) {
        v *= scale;
    }
    return *this;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    char buf[64];
    for (size_t i = 0; i < dim_; i++) {
        out << "[";
        for (size_t j = 0; j < dim_; j++) {
            const auto &v = (*this)(i, j);
            std::snprintf(buf, sizeof(buf), "%s%.12g%+.12gi", j ? ", " : "", v.real(), v.imag());
            out << buf;
        }
        out << "]\n";
    }
    return out.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    size_t n = a.dim();
    ComplexMatrix result(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{0, 0}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                result(i, j) += aik * b(k, j);
            }
        }
    }
    return result;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scale) {
    m *= scale;
    return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix result(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            result(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return result;
}

double norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &x : v) {
        total += std::norm(x);
    }
    return std::sqrt(total);
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    double defect = m_.hermitian_defect();
    if (defect > kHermitianTol) {
        throw InvalidStateError("density matrix not Hermitian (defect " + std::to_string(defect) + ")");
    }
    Complex tr = m_.trace();
    if (std::abs(tr - Complex{1, 0}) > kTraceTol) {
        throw InvalidStateError("density matrix trace " + std::to_string(tr.real()) + " != 1");
    }
    auto eig = eig_hermitian(m_);
    if (eig.eigenvalues.back() < -kPsdTol) {
        throw InvalidStateError(
            "density matrix has negative eigenvalue " + std::to_string(eig.eigenvalues.back()));
    }
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> amplitudes) {
    double n = norm(amplitudes);
    if (n == 0) {
        throw InvalidStateError("zero state vector");
    }
    StateVector unit(amplitudes.begin(), amplitudes.end());
    for (auto &a : unit) {
        a /= n;
    }
    return DensityMatrix(outer(unit));
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0});
}

StateVector EigenDecomposition::eigenvector(size_t i) const {
    StateVector v(eigenvectors.dim());
    for (size_t k = 0; k < v.size(); k++) {
        v[k] = eigenvectors(k, i);
    }
    return v;
}

namespace pauli {
ComplexMatrix i2() {
    return ComplexMatrix::identity(2);
}
ComplexMatrix x() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix y() {
    return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
}
ComplexMatrix z() {
    return {{1, 0}, {0, -1}};
}
ComplexMatrix sigma(size_t axis) {
    switch (axis) {
        case 0:
            return x();
        case 1:
            return y();
        case 2:
            return z();
        default:
            throw DimensionError("Pauli axis must be 0, 1 or 2");
    }
}
}  // namespace pauli

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    if (da * db > kMaxDim) {
        throw DimensionError("tensor product dimension " + std::to_string(da * db) + " exceeds 8");
    }
    ComplexMatrix result(da * db);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            for (size_t k = 0; k < db; k++) {
                for (size_t l = 0; l < db; l++) {
                    result(i * db + k, j * db + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return result;
}

StateVector tensor(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() * b.size() > kMaxDim) {
        throw DimensionError("tensor product dimension exceeds 8");
    }
    StateVector result;
    result.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            result.push_back(x * y);
        }
    }
    return result;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const size_t> subsystem_dims, size_t traced_index) {
    if (subsystem_dims.empty() || traced_index >= subsystem_dims.size()) {
        throw DimensionError("partial_trace: traced subsystem index out of range");
    }
    size_t total = std::accumulate(subsystem_dims.begin(), subsystem_dims.end(), size_t{1}, std::multiplies<>());
    if (total != m.dim()) {
        throw DimensionError("partial_trace: subsystem dims do not multiply to the matrix dimension");
    }
    // Index = (outer * traced_dim + t) * inner + rest.
    size_t traced_dim = subsystem_dims[traced_index];
    size_t inner = 1;
    for (size_t k = traced_index + 1; k < subsystem_dims.size(); k++) {
        inner *= subsystem_dims[k];
    }
    size_t outer_dim = total / (traced_dim * inner);
    ComplexMatrix result(outer_dim * inner);
    for (size_t o1 = 0; o1 < outer_dim; o1++) {
        for (size_t i1 = 0; i1 < inner; i1++) {
            for (size_t o2 = 0; o2 < outer_dim; o2++) {
                for (size_t i2 = 0; i2 < inner; i2++) {
                    Complex acc = 0;
                    for (size_t t = 0; t < traced_dim; t++) {
                        acc += m((o1 * traced_dim + t) * inner + i1, (o2 * traced_dim + t) * inner + i2);
                    }
                    result(o1 * inner + i1, o2 * inner + i2) = acc;
                }
            }
        }
    }
    return result;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const size_t> subsystem_dims, size_t traced_index) {
    return DensityMatrix(partial_trace(rho.matrix(), subsystem_dims, traced_index));
}

DensityMatrix partial_trace(
    const DensityMatrix &rho, std::initializer_list<size_t> subsystem_dims, size_t traced_index) {
    return partial_trace(rho, std::span<const size_t>(subsystem_dims.begin(), subsystem_dims.size()), traced_index);
}

EigenDecomposition eig_hermitian(const ComplexMatrix &m) {
    if (!m.is_hermitian(kHermitianTol)) {
        throw PreconditionError("eig_hermitian: input not Hermitian (defect " + std::to_string(m.hermitian_defect()) + ")");
    }
    size_t n = m.dim();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5, 0};
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    double tol = kJacobiOffDiagonalTol * std::max(1.0, std::sqrt(frobenius_sq(a)));

    bool converged = false;
    for (int sweep = 0; sweep <= kJacobiMaxSweeps; sweep++) {
        if (off_diagonal_frobenius(a) <= tol) {
            converged = true;
            break;
        }
        if (sweep == kJacobiMaxSweeps) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex g = a(p, q);
                double mag = std::abs(g);
                if (mag == 0) {
                    continue;
                }
                Complex phase = g / mag;
                double zeta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                Complex pc = std::conj(phase);

                // a <- J^dag a J with J_pp = c, J_pq = s, J_qp = -s conj(e), J_qq = c conj(e).
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - s * pc * akq;
                    a(k, q) = s * akp + c * pc * akq;
                    Complex vkp = vecs(k, p);
                    Complex vkq = vecs(k, q);
                    vecs(k, p) = c * vkp - s * pc * vkq;
                    vecs(k, q) = s * vkp + c * pc * vkq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged) {
        throw NumericalError("eig_hermitian: Jacobi iteration did not converge in 100 sweeps");
    }

    for (size_t col = 0; col < n; col++) {
        for (size_t k = 0; k < n; k++) {
            Complex v = vecs(k, col);
            double mag = std::abs(v);
            if (mag > kPhaseFixTol) {
                Complex fix = std::conj(v) / mag;
                for (size_t row = 0; row < n; row++) {
                    vecs(row, col) *= fix;
                }
                vecs(k, col) = mag;
                break;
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        double lx = a(x, x).real();
        double ly = a(y, y).real();
        if (lx != ly) {
            return lx > ly;
        }
        return lex_greater(vecs, x, y);
    });

    EigenDecomposition result{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t i = 0; i < n; i++) {
        result.eigenvalues[i] = a(order[i], order[i]).real();
        for (size_t k = 0; k < n; k++) {
            result.eigenvectors(k, i) = vecs(k, order[i]);
        }
    }
    return result;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    size_t n = m.dim();
    ComplexMatrix a = m;
    bool converged = false;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; sweep++) {
        converged = true;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double alpha = 0;
                double beta = 0;
                Complex gamma = 0;
                for (size_t k = 0; k < n; k++) {
                    alpha += std::norm(a(k, p));
                    beta += std::norm(a(k, q));
                    gamma += std::conj(a(k, p)) * a(k, q);
                }
                double mag = std::abs(gamma);
                if (mag == 0 || mag <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                converged = false;
                Complex pc = std::conj(gamma / mag);
                double zeta = (beta - alpha) / (2 * mag);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - s * pc * akq;
                    a(k, q) = s * akp + c * pc * akq;
                }
            }
        }
    }
    if (!converged) {
        throw NumericalError("singular_values: one-sided Jacobi did not converge in 100 sweeps");
    }
    std::vector<double> values(n);
    for (size_t col = 0; col < n; col++) {
        double total = 0;
        for (size_t k = 0; k < n; k++) {
            total += std::norm(a(k, col));
        }
        values[col] = std::sqrt(total);
    }
    std::sort(values.rbegin(), values.rend());
    return values;
}

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    auto eig = eig_hermitian(m);
    size_t n = m.dim();
    ComplexMatrix result(n);
    for (size_t i = 0; i < n; i++) {
        double lambda = eig.eigenvalues[i];
        if (lambda < -kSqrtClamp) {
            throw NotPsdError("sqrt_psd: eigenvalue " + std::to_string(lambda) + " below -1e-8");
        }
        if (lambda <= 0) {
            continue;
        }
        double root = std::sqrt(lambda);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                result(r, c) += root * eig.eigenvectors(r, i) * std::conj(eig.eigenvectors(c, i));
            }
        }
    }
    return result;
}

double shannon_entropy(std::span<const double> probabilities) {
    double total = 0;
    for (double p : probabilities) {
        if (p > 0) {
            total -= p * std::log2(p);
        }
    }
    return total;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    auto eig = eig_hermitian(rho.matrix());
    double s = shannon_entropy(eig.eigenvalues);
    return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

}  // namespace unruh
