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

#include "unruh/channels.h"

#include <cmath>

#include "unruh/physics.h"

namespace unruh {

namespace {

ComplexMatrix lowering(double amplitude) {
    ComplexMatrix m(2);
    m(1, 0) = amplitude;
    return m;
}

size_t choi_input_dim(const ComplexMatrix &m) {
    size_t d = static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(m.dim()))));
    if (d * d != m.dim()) {
        throw DimensionError("Choi matrix dimension is not a perfect square");
    }
    return d;
}

}  // namespace

KrausMap::KrausMap(std::vector<KrausTerm> terms, std::string label)
    : terms_(std::move(terms)), label_(std::move(label)) {
    if (terms_.empty()) {
        throw DimensionError("KrausMap needs at least one term");
    }
    for (const auto &t : terms_) {
        if (t.sign != 1 && t.sign != -1) {
            throw PreconditionError("Kraus term sign must be +1 or -1");
        }
        if (t.op.dim() != terms_.front().op.dim()) {
            throw DimensionError("Kraus operators must share one dimension");
        }
    }
}

bool KrausMap::all_positive() const {
    for (const auto &t : terms_) {
        if (t.sign < 0) {
            return false;
        }
    }
    return true;
}

ComplexMatrix KrausMap::completeness() const {
    ComplexMatrix total(dim());
    for (const auto &t : terms_) {
        total += (t.op.adjoint() * t.op) * Complex{static_cast<double>(t.sign), 0};
    }
    return total;
}

bool KrausMap::is_trace_preserving(double tol) const {
    return max_abs_diff(completeness(), ComplexMatrix::identity(dim())) <= tol;
}

ChoiMatrix ChoiMatrix::doubled() const {
    if (normalization == ChoiNormalization::kDoubled) {
        return *this;
    }
    double d = static_cast<double>(choi_input_dim(matrix));
    return ChoiMatrix{matrix * Complex{d, 0}, ChoiNormalization::kDoubled};
}

ChoiMatrix ChoiMatrix::state_normalized() const {
    if (normalization == ChoiNormalization::kState) {
        return *this;
    }
    double d = static_cast<double>(choi_input_dim(matrix));
    return ChoiMatrix{matrix * Complex{1 / d, 0}, ChoiNormalization::kState};
}

KrausMap unruh_kraus(double r) {
    check_bogoliubov_angle(r);
    return KrausMap(
        {{1, ComplexMatrix::diagonal({std::cos(r), 1})}, {1, lowering(std::sin(r))}}, "unruh");
}

KrausMap amplitude_damping(double gamma) {
    if (!(gamma >= 0 && gamma <= 1)) {
        throw DomainError("amplitude damping gamma = " + std::to_string(gamma) + " outside [0, 1]");
    }
    return KrausMap(
        {{1, ComplexMatrix::diagonal({std::sqrt(1 - gamma), 1})}, {1, lowering(std::sqrt(gamma))}},
        "amplitude_damping");
}

KrausMap inverse_unruh(double r) {
    check_bogoliubov_angle(r);
    double c = std::cos(r);
    if (!(c > 0)) {
        throw NumericalError("inverse_unruh: cos r = 0, map is singular");
    }
    return KrausMap({{1, ComplexMatrix::diagonal({1 / c, 1})}, {-1, lowering(std::tan(r))}}, "inverse_unruh");
}

ComplexMatrix apply(const KrausMap &map, const ComplexMatrix &rho) {
    if (rho.dim() != map.dim()) {
        throw DimensionError("apply: map dimension does not match operator dimension");
    }
    ComplexMatrix out(rho.dim());
    for (const auto &t : map.terms()) {
        out += (t.op * rho * t.op.adjoint()) * Complex{static_cast<double>(t.sign), 0};
    }
    return out;
}

DensityMatrix apply(const KrausMap &map, const DensityMatrix &rho) {
    if (!map.all_positive()) {
        throw PreconditionError("apply: signed map output is not guaranteed to be a density matrix");
    }
    return DensityMatrix(apply(map, rho.matrix()));
}

ComplexMatrix apply_to_second(const KrausMap &map, const ComplexMatrix &rho) {
    if (map.dim() != 2 || rho.dim() != 4) {
        throw DimensionError("apply_to_second: needs a qubit map and a two-qubit operator");
    }
    const auto id = ComplexMatrix::identity(2);
    ComplexMatrix out(4);
    for (const auto &t : map.terms()) {
        auto lifted = tensor(id, t.op);
        out += (lifted * rho * lifted.adjoint()) * Complex{static_cast<double>(t.sign), 0};
    }
    return out;
}

DensityMatrix apply_to_second(const KrausMap &map, const DensityMatrix &rho) {
    if (!map.all_positive()) {
        throw PreconditionError("apply_to_second: signed map output is not guaranteed to be a density matrix");
    }
    return DensityMatrix(apply_to_second(map, rho.matrix()));
}

ChoiMatrix choi_matrix(const KrausMap &map) {
    size_t d = map.dim();
    if (d * d > kMaxDim) {
        throw DimensionError("choi_matrix: map dimension too large");
    }
    ComplexMatrix choi(d * d);
    for (size_t j = 0; j < d; j++) {
        for (size_t k = 0; k < d; k++) {
            ComplexMatrix unit(d);
            unit(j, k) = 1;
            auto image = apply(map, unit);
            for (size_t a = 0; a < d; a++) {
                for (size_t b = 0; b < d; b++) {
                    choi(j * d + a, k * d + b) = image(a, b);
                }
            }
        }
    }
    return ChoiMatrix{std::move(choi), ChoiNormalization::kDoubled};
}

KrausMap kraus_from_choi(const ChoiMatrix &choi) {
    auto doubled = choi.doubled();
    size_t d = choi_input_dim(doubled.matrix);
    auto eig = eig_hermitian(doubled.matrix);
    std::vector<KrausTerm> terms;
    for (size_t i = 0; i < eig.eigenvalues.size(); i++) {
        double lambda = eig.eigenvalues[i];
        if (std::abs(lambda) <= kZeroEigenvalueTol) {
            continue;
        }
        double scale = std::sqrt(std::abs(lambda));
        ComplexMatrix op(d);
        for (size_t col = 0; col < d; col++) {
            for (size_t row = 0; row < d; row++) {
                op(row, col) = scale * eig.eigenvectors(col * d + row, i);
            }
        }
        terms.push_back({lambda > 0 ? 1 : -1, std::move(op)});
    }
    if (terms.empty()) {
        throw NumericalError("kraus_from_choi: Choi matrix is zero");
    }
    return KrausMap(std::move(terms), "from_choi");
}

CpVerdict is_cp(const ChoiMatrix &choi) {
    auto eig = eig_hermitian(choi.matrix);
    double min_eigenvalue = eig.eigenvalues.back();
    return CpVerdict{min_eigenvalue >= -kCpTol, min_eigenvalue};
}

KrausMap compose(const KrausMap &outer, const KrausMap &inner) {
    if (outer.dim() != inner.dim()) {
        throw DimensionError("compose: map dimensions differ");
    }
    std::vector<KrausTerm> terms;
    terms.reserve(outer.terms().size() * inner.terms().size());
    for (const auto &o : outer.terms()) {
        for (const auto &i : inner.terms()) {
            terms.push_back({o.sign * i.sign, o.op * i.op});
        }
    }
    return KrausMap(std::move(terms), outer.label() + "*" + inner.label());
}

}  // namespace unruh
