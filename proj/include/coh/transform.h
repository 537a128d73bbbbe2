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

#ifndef COH_TRANSFORM_H
#define COH_TRANSFORM_H

#include <cstddef>

#include "coh/circuit.h"

namespace coh {

struct DeferredCircuit {
    Circuit circuit;
    /// Fresh |0⟩ wires appended after the original register (indices ≥ original qubit count).
    std::size_t extra_qubits = 0;
};

/// Moves every measurement to the end. Each ClassicallyControlledGate becomes a ControlledGate on
/// the qubit holding its bit. A measured qubit that is acted on again, or whose classical bit is
/// rewritten, is first copied by CNOT into a fresh |0⟩ wire, and the copy is measured instead.
/// Tracing the extra wires gives the same channel as the input circuit.
DeferredCircuit defer_measurements(const Circuit &c);

}  // namespace coh

#endif
