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

#ifndef COH_DISTANCE_H
#define COH_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coh/channel.h"
#include "coh/matrix.h"
#include "coh/states.h"

namespace coh {

/// ½‖a − b‖₁. Throws ShapeError on a dimension mismatch.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// D(E(|ψ⟩⟨ψ|), V|ψ⟩⟨ψ|V†).
double pure_input_distance(const KrausMap &ch, const ComplexMatrix &target, const PureState &psi);

struct InducedDistanceOptions {
    /// Total objective evaluations, shared evenly between starts.
    std::size_t budget = 20000;
    std::size_t random_starts = 8;
    double initial_step = 0.5;
    double min_step = 1e-7;
    double min_improvement = 1e-10;
};

struct InducedDistance {
    /// Achieved by `witness`; a lower bound on the induced trace distance.
    double value = 0;
    PureState witness;
    std::size_t start_index = 0;
    std::size_t evaluations = 0;
};

/// Multi-start coordinate ascent for max_ψ D(E(|ψ⟩⟨ψ|), V|ψ⟩⟨ψ|V†).
///
/// Starts, in index order: the computational basis, the conjugate basis (H^⊗n columns for
/// qubit dimensions, Fourier columns otherwise), then `random_starts` Haar states, each seeded
/// from (seed, start index). Each start runs coordinate ascent over the 2d real coordinates
/// (renormalizing after each move), halving the step after a pass that gains less than
/// `min_improvement`, until the step falls below `min_step` or the start's budget is spent.
/// The best start wins; ties go to the lowest index.
InducedDistance induced_distance_lower(
    const KrausMap &ch, const ComplexMatrix &target, std::uint64_t seed,
    const InducedDistanceOptions &options = {});

struct NogoBound {
    double bound = 0;
    /// H^⊗n|x⟩ for the winning x; D(E_τ(input), H^⊗n input H^⊗n) ≥ bound.
    PureState witness_state;
    std::size_t witness_basis_index = 0;
    /// Diagonal of σ = E(I/2ⁿ ⊗ Δ(τ)).
    std::vector<double> sigma_diagonal;
};

/// Certified lower bound on the distance between ρ ↦ E(ρ ⊗ τ) and H^⊗n.
///
/// `ch` maps system (n qubits) ⊗ ancilla to the n-qubit system and must commute with Δ
/// (NotDephasingCovariant otherwise). The bound is max_x (1 − ⟨x|σ|x⟩); ties within 1e-12
/// go to the smallest x.
NogoBound certified_nogo_bound(
    const KrausMap &ch, std::size_t n, const DensityMatrix &ancilla, double tol = 1e-9);

/// Renders a basis index as an n-bit string, most significant bit first.
std::string bitstring(std::size_t value, std::size_t bits);

}  // namespace coh

#endif
