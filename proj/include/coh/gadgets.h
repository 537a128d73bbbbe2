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

#ifndef COH_GADGETS_H
#define COH_GADGETS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coh/channel.h"
#include "coh/circuit.h"
#include "coh/simulator.h"
#include "coh/states.h"

namespace coh {

/// An adaptive circuit together with the resource state it consumes and the gate it implements.
struct Gadget {
    std::string name;
    Circuit circuit;
    WireMap wires;
    /// Human-readable ancilla constructor, e.g. "-*+i".
    std::string ancilla_spec;
    PureState ancilla;
    ComplexMatrix target;
};

/// Names accepted by gadget_library.
std::vector<std::string> gadget_names();

/// z_gadget, s_gadget, t_msi, diagonal_uk(k) for k ≥ 1, hadamard_gadget_a, hadamard_gadget_b,
/// teleport_gate(NAME) for a single-qubit gate name. Throws UnknownGadget otherwise.
Gadget gadget_library(const std::string &name);

Gadget z_gadget();
Gadget s_gadget();
Gadget t_msi();
/// Injects U_k = diag(1, e^{2πi/2^k}). Each level consumes U_j|+⟩ and, on outcome 1, runs the
/// level below to apply the U_j² = U_{j−1} correction.
Gadget diagonal_uk(std::size_t k);
Gadget hadamard_gadget_a();
Gadget hadamard_gadget_b();
/// Gate teleportation through (1 ⊗ U)|φ⁺⟩. The correction for each outcome is derived by
/// enumerating the branches.
Gadget teleport_gate(const ComplexMatrix &u, const std::string &label);

/// Channel of the gadget with its ancilla attached and non-output wires traced.
QuantumChannel gadget_channel(const Gadget &g);

struct GadgetCheck {
    double choi_distance = 0;
    /// max over the random inputs of D(E(|ψ⟩⟨ψ|), U|ψ⟩⟨ψ|U†).
    double max_state_distance = 0;
    std::size_t branches = 0;
    bool passed = false;
};

/// Compares the gadget channel with the target's unitary channel by Choi distance and on
/// `random_inputs` Haar-random inputs.
GadgetCheck verify_gadget(const Gadget &g, double tol = 1e-9, std::size_t random_inputs = 20, std::uint64_t seed = 0);

}  // namespace coh

#endif
