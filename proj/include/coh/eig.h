// Copyright 2026 The cohkit Authors
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

#ifndef COH_EIG_H
#define COH_EIG_H

#include <vector>

#include "coh/matrix.h"

namespace coh {

struct HermitianEig {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the eigenvector for eigenvalues[k].
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Sweeps visit pivots (p, q) in row-major order p < q, so the output depends only on the input bits.
/// Throws NotHermitian if ‖m − m†‖_max exceeds `hermitian_tol` and ShapeError for non-square input.
HermitianEig hermitian_eig(const ComplexMatrix &m, double hermitian_tol = 1e-10);

/// Same sweep as hermitian_eig without accumulating eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double hermitian_tol = 1e-10);

/// ‖m‖₁ = Tr √(m†m), the sum of singular values. Square input only (ShapeError otherwise).
double trace_norm(const ComplexMatrix &m);

}  // namespace coh

#endif
