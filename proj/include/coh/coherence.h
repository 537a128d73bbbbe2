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

#ifndef COH_COHERENCE_H
#define COH_COHERENCE_H

#include <cstddef>
#include <optional>
#include <vector>

#include "coh/channel.h"
#include "coh/matrix.h"
#include "coh/states.h"

namespace coh {

/// U = Σ_x e^{iθ_x}|π(x)⟩⟨x|.
struct IncoherentDecomposition {
    std::vector<std::size_t> permutation;
    /// Radians in (−π, π].
    std::vector<double> phases;

    ComplexMatrix matrix() const;
};

struct CoherenceRank {
    std::size_t value = 0;
    double tolerance_used = 0;
    /// Some amplitude magnitude lies within a factor of 10 of the threshold on either side.
    bool near_threshold = false;
};

/// Zeroes off-diagonal entries. Diagonal entries are copied bit-for-bit.
DensityMatrix dephase(const DensityMatrix &rho);
ComplexMatrix dephase(const ComplexMatrix &m);

bool is_incoherent_state(const DensityMatrix &rho, double tol = 1e-9);

/// Empty unless every column has exactly one entry of magnitude ≥ 1 − tol and the rest ≤ tol.
/// Throws NotUnitary if u is not unitary within tol.
std::optional<IncoherentDecomposition> classify_incoherent_unitary(const ComplexMatrix &u, double tol = 1e-9);

/// Number of amplitudes with magnitude > tol.
CoherenceRank coherence_rank(const PureState &psi, double tol = 1e-9);
CoherenceRank coherence_rank(std::span<const Complex> amplitudes, double tol = 1e-9);

/// max_{i,j} ‖Δ(E(|i⟩⟨j|)) − E(Δ(|i⟩⟨j|))‖_max. Input and output dims may differ.
double dephasing_commutator(const KrausMap &ch);
/// max_{i,j} ‖Δ(E(Δ(|i⟩⟨j|))) − E(Δ(|i⟩⟨j|))‖_max.
double mio_defect(const KrausMap &ch);

bool is_dephasing_covariant(const KrausMap &ch, double tol = 1e-9);
bool is_mio(const KrausMap &ch, double tol = 1e-9);

}  // namespace coh

#endif
