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

#ifndef COH_CIRCUIT_H
#define COH_CIRCUIT_H

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "coh/matrix.h"

namespace coh {

/// Unitary on `targets`; the first target is the most significant factor of `matrix`.
struct Gate {
    std::string name;
    ComplexMatrix matrix;
    std::vector<std::size_t> targets;
};

/// Applies `inner` when the control bitstring (first control most significant) lies in `triggers`.
struct ControlledGate {
    Gate inner;
    std::vector<std::size_t> controls;
    std::vector<std::size_t> triggers;
};

struct Measure {
    std::size_t qubit;
    std::size_t cbit;
};

/// Applies `inner` when classical bit `cbit` equals `value`.
struct ClassicallyControlledGate {
    Gate inner;
    std::size_t cbit;
    int value;
};

using CircuitOp = std::variant<Gate, ControlledGate, Measure, ClassicallyControlledGate>;

/// Gate with a standard name (I, X, ..., TOFFOLI). Throws ShapeError for unknown names.
Gate named_gate(const std::string &name, std::vector<std::size_t> targets);

class Circuit {
   public:
    Circuit() = default;
    Circuit(std::size_t num_qubits, std::size_t num_cbits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_cbits() const {
        return num_cbits_;
    }
    const std::vector<CircuitOp> &ops() const {
        return ops_;
    }

    /// Each append validates wires (range, distinctness, gate arity) and classical bits
    /// (range, and for conditions, written by an earlier Measure). Throws ShapeError.
    Circuit &append(CircuitOp op);
    Circuit &gate(const std::string &name, std::vector<std::size_t> targets);
    Circuit &gate(Gate g);
    Circuit &controlled(Gate inner, std::vector<std::size_t> controls, std::vector<std::size_t> triggers);
    Circuit &measure(std::size_t qubit, std::size_t cbit);
    Circuit &classically_controlled(Gate inner, std::size_t cbit, int value = 1);

    /// Grows the register; existing indices are unchanged.
    void resize(std::size_t num_qubits, std::size_t num_cbits);

    std::size_t measurement_count() const;

   private:
    std::size_t num_qubits_ = 0;
    std::size_t num_cbits_ = 0;
    std::vector<CircuitOp> ops_;
    std::vector<bool> written_;
};

/// Qubits an op acts on non-trivially as a target or measured wire (controls excluded).
std::vector<std::size_t> op_targets(const CircuitOp &op);

}  // namespace coh

#endif
