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

#ifndef COH_TOLERANCES_H
#define COH_TOLERANCES_H

#include <cstddef>

namespace coh {

/// Every numerical comparison threshold used by the toolkit, in one place.
struct Tolerances {
    double norm = 1e-10;         // |‖ψ‖² − 1| for pure states
    double hermitian = 1e-10;    // ‖A − A†‖_max for density matrices
    double trace = 1e-10;        // |tr ρ − 1|
    double psd = 1e-10;          // smallest admissible eigenvalue is −psd
    double eig_orthonormal = 1e-9;
    double unitary = 1e-9;       // ‖U†U − I‖_max
    double channel = 1e-9;       // trace preservation and superoperator equality
    double coherence_rank = 1e-9;
    double kraus_drop = 1e-12;   // Kraus operators with smaller Frobenius norm are discarded
    double branch_prune = 1e-12; // simulation branches with smaller probability are discarded
    double gate_phase = 1e-9;    // |tr(A†B)|/d ≥ 1 − gate_phase means equal up to phase
    double choi_distance = 1e-9;
    double bound_slack = 1e-9;
};

/// Module-wide defaults.
inline const Tolerances &default_tolerances() {
    static const Tolerances t{};
    return t;
}

/// Hard limit on any matrix dimension (2^12).
inline constexpr std::size_t kMaxDimension = 4096;

}  // namespace coh

#endif
