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

#ifndef UNRUH_CHANNELS_H
#define UNRUH_CHANNELS_H

#include <string>
#include <vector>

#include "unruh/qmat.h"

namespace unruh {

/// Eigenvalues of modulus at or below this are dropped when folding a Choi matrix.
constexpr double kZeroEigenvalueTol = 1e-12;
constexpr double kCompletenessTol = 1e-10;
constexpr double kCpTol = 1e-10;

struct KrausTerm {
    /// +1 or -1.
    int sign;
    ComplexMatrix op;
};

/// Hermitian map rho -> sum_k sign_k K_k rho K_k^dag. A map whose terms are all
/// positive is completely positive; with sum K^dag K = I it is also trace preserving.
class KrausMap {
   public:
    KrausMap(std::vector<KrausTerm> terms, std::string label);

    const std::vector<KrausTerm> &terms() const {
        return terms_;
    }
    const std::string &label() const {
        return label_;
    }
    size_t dim() const {
        return terms_.front().op.dim();
    }

    /// True when every term carries a positive sign.
    bool all_positive() const;

    /// sum_k sign_k K_k^dag K_k
    ComplexMatrix completeness() const;
    bool is_trace_preserving(double tol = kCompletenessTol) const;

   private:
    std::vector<KrausTerm> terms_;
    std::string label_;
};

enum class ChoiNormalization {
    /// sum_{jk} |j><k| (x) E(|j><k|); trace d for a trace-preserving map.
    kDoubled,
    /// Doubled form divided by d; a density matrix when the map is CPTP.
    kState,
};

struct ChoiMatrix {
    ComplexMatrix matrix;
    ChoiNormalization normalization;

    ChoiMatrix doubled() const;
    ChoiMatrix state_normalized() const;
};

struct CpVerdict {
    bool completely_positive;
    double min_eigenvalue;
};

/// Unruh channel: K1 = diag(cos r, 1), K2 = sin r |1><0|.
KrausMap unruh_kraus(double r);

/// Amplitude damping with K1 = diag(sqrt(1 - gamma), 1), K2 = sqrt(gamma) |1><0|, so that
/// unruh_kraus(r) and amplitude_damping(sin^2 r) coincide.
KrausMap amplitude_damping(double gamma);

/// Formal inverse of the Unruh channel: +diag(1/cos r, 1), -tan r |1><0|. Not CP for r > 0.
KrausMap inverse_unruh(double r);

/// sum_k sign_k K rho K^dag. No positivity is assumed of the result.
ComplexMatrix apply(const KrausMap &map, const ComplexMatrix &rho);
/// CP-only overload. Throws PreconditionError for signed maps.
DensityMatrix apply(const KrausMap &map, const DensityMatrix &rho);

/// Acts with the map on the second qubit of a two-qubit operator: sum sign (I (x) K) rho (I (x) K)^dag.
ComplexMatrix apply_to_second(const KrausMap &map, const ComplexMatrix &rho);
DensityMatrix apply_to_second(const KrausMap &map, const DensityMatrix &rho);

/// Doubled-normalization Choi matrix of a qubit map.
ChoiMatrix choi_matrix(const KrausMap &map);

/// Diagonalizes the Choi matrix and folds each eigenvector (scaled to sqrt|lambda|)
/// column-major into a d x d operator: (v0, v1, v2, v3) -> [[v0, v2], [v1, v3]].
/// Negative eigenvalues become negative-sign terms.
KrausMap kraus_from_choi(const ChoiMatrix &choi);

/// CP iff the minimum Choi eigenvalue is >= -1e-10.
CpVerdict is_cp(const ChoiMatrix &choi);

/// outer o inner: every product K_out K_in, signs multiplied.
KrausMap compose(const KrausMap &outer, const KrausMap &inner);

}  // namespace unruh

#endif
