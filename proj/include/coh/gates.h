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

#ifndef COH_GATES_H
#define COH_GATES_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coh/matrix.h"

namespace coh::gates {

ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
ComplexMatrix S();
ComplexMatrix Sdg();
ComplexMatrix T();
ComplexMatrix Tdg();
/// Control is the first (most significant) qubit.
ComplexMatrix CNOT();
ComplexMatrix CZ();
ComplexMatrix SWAP();
ComplexMatrix TOFFOLI();

/// diag(1, e^{iθ}).
ComplexMatrix phase(double theta);
/// diag(1, e^{2πi/2^k}); U_1 = Z, U_2 = S, U_3 = T.
ComplexMatrix dyadic_phase(std::size_t k);

/// H^{⊗n}.
ComplexMatrix hadamard_power(std::size_t n);

/// Matrix for a named gate from the circuit vocabulary (I, X, Y, Z, H, S, Sdg, T, Tdg, CNOT, CZ, SWAP, TOFFOLI).
std::optional<ComplexMatrix> by_name(std::string_view name);
std::vector<std::string> names();

/// Σ_{x∈S} |x⟩⟨x| ⊗ U + Σ_{y∉S} |y⟩⟨y| ⊗ 1 with `controls` control qubits preceding the target register.
/// Each trigger is a control bitstring packed big-endian (first control is the most significant bit).
/// Throws NotUnitary if u is not unitary and InvalidTriggerSet if `triggers` is empty or out of range.
ComplexMatrix controlled_unitary(const ComplexMatrix &u, std::size_t controls, std::span<const std::size_t> triggers);

}  // namespace coh::gates

#endif
