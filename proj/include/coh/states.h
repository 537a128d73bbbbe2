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

#ifndef COH_STATES_H
#define COH_STATES_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "coh/matrix.h"
#include "coh/tolerances.h"

namespace coh {

/// Normalized state vector.
class PureState {
   public:
    PureState() = default;

    /// Validates Σ|a|² = 1 within tolerances.norm; throws ShapeError otherwise.
    explicit PureState(ComplexVector amplitudes, const Tolerances &tol = default_tolerances());

    /// Rescales to unit norm. Throws ShapeError for the zero vector.
    static PureState normalized(ComplexVector amplitudes);
    /// |index⟩ in dimension dim.
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t k) const {
        return amplitudes_[k];
    }

    /// |ψ⟩⟨ψ|.
    ComplexMatrix projector() const;

   private:
    ComplexVector amplitudes_;
};

PureState tensor(const PureState &a, const PureState &b);

/// Unit-trace positive semidefinite Hermitian matrix.
class DensityMatrix {
   public:
    DensityMatrix() = default;

    /// Validates Hermiticity, unit trace and positivity (smallest eigenvalue ≥ −tolerances.psd).
    explicit DensityMatrix(ComplexMatrix matrix, const Tolerances &tol = default_tolerances());

    /// Skips validation. For internal results that are states by construction (channel outputs, reductions).
    static DensityMatrix trusted(ComplexMatrix matrix);

    static DensityMatrix pure(const PureState &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);
    /// Σ p_x |x⟩⟨x|; probabilities must be non-negative and sum to one.
    static DensityMatrix incoherent(std::span<const double> probabilities);

    std::size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return matrix_(r, c);
    }

   private:
    ComplexMatrix matrix_;
};

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Reduced state on the subsystems listed in `keep` (kept in ascending order).
/// Subsystem 0 is the most significant tensor factor. Throws ShapeError if Π dims ≠ rho.dim()
/// or an index in `keep` is out of range.
DensityMatrix partial_trace(
    const DensityMatrix &rho, std::span<const std::size_t> dims, std::span<const std::size_t> keep);

/// Same contraction on an arbitrary square operator.
ComplexMatrix partial_trace(
    const ComplexMatrix &m, std::span<const std::size_t> dims, std::span<const std::size_t> keep);

/// Reduced state of a pure state, without forming |ψ⟩⟨ψ|.
DensityMatrix partial_trace(
    const PureState &psi, std::span<const std::size_t> dims, std::span<const std::size_t> keep);

/// Qubit-register helper: `n` subsystems of dimension 2.
std::vector<std::size_t> qubit_dims(std::size_t n);

/// Named single- and two-qubit states: "0", "1", "+", "-", "+i", "-i", "T", "phi+".
/// Throws std::invalid_argument for other names.
PureState named_state(std::string_view name);

/// Product of named states separated by '*', e.g. "-*+i". The empty string gives the trivial 1-dim state.
PureState state_from_spec(std::string_view spec);

/// |+⟩^⊗n.
PureState plus_state(std::size_t n);

}  // namespace coh

#endif
