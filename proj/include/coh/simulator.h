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

#ifndef COH_SIMULATOR_H
#define COH_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coh/channel.h"
#include "coh/circuit.h"
#include "coh/matrix.h"
#include "coh/states.h"

namespace coh {

struct SimBranch {
    /// Measurement results in op order, e.g. "01".
    std::string record;
    /// Final classical register; −1 for bits never written.
    std::vector<int> cbits;
    double probability = 0;
    PureState state;
};

/// Branches sorted by record; probabilities sum to 1 (enumerate) or the single sampled
/// branch carries the probability of its record.
struct SimOutcome {
    std::vector<SimBranch> branches;
};

struct SimMode {
    enum class Kind { Enumerate, Sample };
    Kind kind = Kind::Enumerate;
    std::uint64_t seed = 0;

    static SimMode enumerate() {
        return {};
    }
    static SimMode sample(std::uint64_t seed) {
        return {Kind::Sample, seed};
    }
};

/// Throws ShapeError if input.dim() != 2ⁿ. Branches with probability below `prune` are dropped.
SimOutcome simulate(const Circuit &c, const PureState &input, SimMode mode = SimMode::enumerate(), double prune = 1e-12);

/// Applies `m` to `targets` of an n-qubit amplitude vector, optionally only where the control
/// bits (first control most significant) form a value listed in `triggers`.
void apply_gate(
    std::span<Complex> amps, std::size_t n, const ComplexMatrix &m, std::span<const std::size_t> targets,
    std::span<const std::size_t> controls = {}, std::span<const std::size_t> triggers = {});

/// Linear operator of one measurement record: the unnormalized post-measurement state is L·ψ.
struct BranchOperator {
    std::string record;
    std::vector<int> cbits;
    ComplexMatrix op;
};

/// Every record's operator, sorted by record. Branches whose operator has max column norm² below
/// `prune` are dropped.
std::vector<BranchOperator> branch_operators(const Circuit &c, double prune = 1e-12);

/// Unitary of a measurement-free circuit. Throws ShapeError if the circuit measures.
ComplexMatrix circuit_unitary(const Circuit &c);

/// Same circuit without its trailing run of Measure ops.
Circuit strip_terminal_measurements(const Circuit &c);

/// Which wires feed the input, hold the ancilla, and form the output of a circuit channel.
/// Input and ancilla wires must partition the register. Output wires are listed in output order;
/// the remaining wires are traced.
struct WireMap {
    std::vector<std::size_t> input;
    std::vector<std::size_t> ancilla;
    std::vector<std::size_t> output;
};

/// Kraus form of ρ ↦ Tr_rest Σ_records L (ρ ⊗ τ) L†, with ρ on `input` wires and τ on `ancilla` wires
/// (first listed wire most significant in both).
QuantumChannel circuit_channel(const Circuit &c, const WireMap &wires, const DensityMatrix &ancilla);

}  // namespace coh

#endif
