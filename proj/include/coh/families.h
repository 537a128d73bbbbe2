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

#ifndef COH_FAMILIES_H
#define COH_FAMILIES_H

#include <cstddef>
#include <string>
#include <vector>

#include "coh/circuit.h"
#include "coh/matrix.h"
#include "coh/rng.h"
#include "coh/states.h"

namespace coh {

/// Σ_x e^{iθ_x}|π(x)⟩⟨x| with uniform π and θ.
ComplexMatrix random_incoherent_unitary(std::size_t dim, Rng &rng);

/// `depth` gates drawn from {X, CNOT, S, T, TOFFOLI} (multi-qubit gates only when they fit).
Circuit random_incoherent_circuit(std::size_t num_qubits, std::size_t depth, Rng &rng);

/// A Hadamard layer V: H on a random target, controlled by a random (possibly empty) subset
/// of the other qubits with a random non-empty trigger set.
CircuitOp random_hadamard_layer(std::size_t num_qubits, Rng &rng);

/// Parameters of an alternating product U_k V_k … U_1 V_1 U_0.
struct FamilySpec {
    std::size_t num_qubits = 1;
    std::size_t k = 0;
    std::size_t depth = 4;
};

struct FamilySample {
    Circuit circuit;
    /// Op indices of the V_i layers, in order.
    std::vector<std::size_t> hadamard_ops;
    ComplexMatrix unitary;
};

/// Each U_i is a random incoherent circuit followed by a register-wide permutation×phase gate.
FamilySample alternating_product(const FamilySpec &spec, Rng &rng);

/// Circuit without its V_i layers.
Circuit strip_hadamard_layers(const FamilySample &s);

/// Random ancilla on `qubits` qubits, cycling by `variant`: Haar pure, Wishart mixed,
/// random incoherent (diagonal), and |+⟩^⊗a.
DensityMatrix random_ancilla(std::size_t qubits, std::size_t variant, Rng &rng);
std::string ancilla_kind(std::size_t variant);

}  // namespace coh

#endif
