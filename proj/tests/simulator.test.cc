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

#include "coh/simulator.h"

#include "gtest/gtest.h"

#include "coh/circuit_parser.h"
#include "coh/gadgets.h"
#include "coh/gates.h"
#include "coh/rng.h"
#include "coh/transform.h"
#include "test_util.test.h"

using namespace coh;
using namespace coh::testing;

namespace {

DensityMatrix wire0(const PureState &psi, std::size_t n) {
    const auto dims = qubit_dims(n);
    const std::vector<std::size_t> keep{0};
    return partial_trace(psi, dims, keep);
}

double total_probability(const SimOutcome &o) {
    double p = 0;
    for (const auto &b : o.branches) {
        p += b.probability;
    }
    return p;
}

QuantumChannel deferred_channel(const Gadget &g) {
    const DeferredCircuit d = defer_measurements(g.circuit);
    WireMap w = g.wires;
    for (std::size_t q = 0; q < d.extra_qubits; ++q) {
        w.ancilla.push_back(g.circuit.num_qubits() + q);
    }
    PureState anc = g.ancilla;
    for (std::size_t q = 0; q < d.extra_qubits; ++q) {
        anc = tensor(anc, named_state("0"));
    }
    return circuit_channel(d.circuit, w, DensityMatrix::pure(anc));
}

}  // namespace

TEST(simulator, no_measurement_single_branch) {
    const Circuit c = parse_circuit("qubits 2\ngate H 0\ngate CNOT 0 1\n");
    const SimOutcome o = simulate(c, PureState::basis(4, 0));
    ASSERT_EQ(o.branches.size(), 1u);
    ASSERT_NEAR(o.branches[0].probability, 1.0, 1e-15);
    ASSERT_LT(max_abs_diff(o.branches[0].state.projector(), named_state("phi+").projector()), 1e-15);
}

TEST(simulator, z_gadget_branches) {
    const Circuit c = z_gadget().circuit;
    Rng rng(137);
    for (int t = 0; t < 10; ++t) {
        const PureState psi = haar_state(2, rng);
        const SimOutcome o = simulate(c, tensor(psi, named_state("-")));
        ASSERT_EQ(o.branches.size(), 2u);
        const ComplexVector zpsi = gates::Z() * psi.amplitudes();
        const ComplexMatrix expected = ComplexMatrix::outer(zpsi, zpsi);
        for (const auto &b : o.branches) {
            ASSERT_NEAR(b.probability, 0.5, 1e-12);
            ASSERT_LT(max_abs_diff(wire0(b.state, 2).matrix(), expected), 1e-12);
        }
    }
}

TEST(simulator, hadamard_gadget_b_branches) {
    const Gadget g = hadamard_gadget_b();
    Rng rng(139);
    for (int t = 0; t < 10; ++t) {
        const PureState psi = haar_state(2, rng);
        const SimOutcome o = simulate(g.circuit, tensor(g.ancilla, psi));
        ASSERT_EQ(o.branches.size(), 2u);
        const ComplexVector hpsi = gates::H() * psi.amplitudes();
        for (const auto &b : o.branches) {
            ASSERT_LT(max_abs_diff(wire0(b.state, 2).matrix(), ComplexMatrix::outer(hpsi, hpsi)), 1e-12);
        }
    }
}

TEST(simulator, probabilities_sum_to_one) {
    Rng rng(149);
    const Circuit c = parse_circuit(
        "qubits 3\ncbits 3\ngate H 0\ngate CNOT 0 1\nmeasure 0 -> 0\ngate H 2 if 0==1\nmeasure 2 -> 1\nmeasure 1 -> 2\n");
    for (int t = 0; t < 5; ++t) {
        const SimOutcome o = simulate(c, haar_state(8, rng));
        ASSERT_NEAR(total_probability(o), 1.0, 1e-12);
        for (std::size_t i = 1; i < o.branches.size(); ++i) {
            ASSERT_LT(o.branches[i - 1].record, o.branches[i].record);
        }
    }
}

TEST(simulator, zero_probability_branches_pruned) {
    const Circuit c = parse_circuit("qubits 1\ncbits 1\nmeasure 0 -> 0\n");
    const SimOutcome o = simulate(c, PureState::basis(2, 1));
    ASSERT_EQ(o.branches.size(), 1u);
    ASSERT_EQ(o.branches[0].record, "1");
    ASSERT_EQ(o.branches[0].cbits, (std::vector<int>{1}));
}

TEST(simulator, sampling_is_deterministic_per_seed) {
    const Circuit c = parse_circuit("qubits 2\ncbits 2\ngate H 0\ngate H 1\nmeasure 0 -> 0\nmeasure 1 -> 1\n");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SimOutcome a = simulate(c, PureState::basis(4, 0), SimMode::sample(seed));
        const SimOutcome b = simulate(c, PureState::basis(4, 0), SimMode::sample(seed));
        ASSERT_EQ(a.branches.size(), 1u);
        ASSERT_EQ(a.branches[0].record, b.branches[0].record);
        ASSERT_NEAR(a.branches[0].probability, 0.25, 1e-12);
    }
}

TEST(simulator, circuit_unitary_matches_gate_products) {
    const Circuit c = parse_circuit("qubits 2\ngate H 0\ngate CNOT 0 1\ngate T 1\n");
    const ComplexMatrix expected = kron(gates::I(), gates::T()) * gates::CNOT() * kron(gates::H(), gates::I());
    ASSERT_LT(max_abs_diff(circuit_unitary(c), expected), 1e-15);
}

TEST(simulator, qubit_zero_is_most_significant) {
    const Circuit c = parse_circuit("qubits 3\ngate X 0\n");
    const SimOutcome o = simulate(c, PureState::basis(8, 0));
    ASSERT_NEAR(std::abs(o.branches[0].state[4]), 1.0, 1e-15);
}

TEST(simulator, apply_gate_with_controls) {
    // CNOT with control 2 and target 0 on |001⟩ gives |101⟩.
    ComplexVector amps(8);
    amps[1] = 1;
    const std::vector<std::size_t> targets{0};
    const std::vector<std::size_t> controls{2};
    const std::vector<std::size_t> triggers{1};
    apply_gate(amps, 3, gates::X(), targets, controls, triggers);
    ASSERT_EQ(amps[5], Complex(1));
}

TEST(simulator, branch_operators_sum_to_isometry) {
    const Gadget g = s_gadget();
    const auto ops = branch_operators(g.circuit);
    const std::size_t d = std::size_t{1} << g.circuit.num_qubits();
    ComplexMatrix gram(d, d);
    for (const auto &b : ops) {
        gram += b.op.adjoint() * b.op;
    }
    ASSERT_LT(max_abs_diff(gram, ComplexMatrix::identity(d)), 1e-12);
}

TEST(simulator, strip_terminal_measurements) {
    const Circuit c = parse_circuit("qubits 2\ncbits 1\ngate H 0\nmeasure 0 -> 0\n");
    ASSERT_EQ(strip_terminal_measurements(c).ops().size(), 1u);
}

TEST(defer, measurement_free_unchanged) {
    const Circuit c = parse_circuit("qubits 2\ngate H 0\ngate CNOT 0 1\n");
    const DeferredCircuit d = defer_measurements(c);
    ASSERT_EQ(d.extra_qubits, 0u);
    ASSERT_EQ(format_circuit(d.circuit), format_circuit(c));
}

TEST(defer, msi_becomes_controlled_s) {
    const Gadget g = t_msi();
    const DeferredCircuit d = defer_measurements(g.circuit);
    ASSERT_EQ(d.extra_qubits, 0u);
    const auto &ops = d.circuit.ops();
    ASSERT_TRUE(std::holds_alternative<Measure>(ops.back()));
    const auto &cs = std::get<ControlledGate>(ops[ops.size() - 2]);
    ASSERT_EQ(cs.inner.name, "S");
    ASSERT_EQ(cs.controls, (std::vector<std::size_t>{1}));
    ASSERT_LT(choi_distance(deferred_channel(g), gadget_channel(g)), 1e-12);
}

TEST(defer, z_gadget_equivalent) {
    const Gadget g = z_gadget();
    ASSERT_LT(choi_distance(deferred_channel(g), gadget_channel(g)), 1e-12);
    ASSERT_LT(choi_distance(deferred_channel(g), unitary_channel(gates::Z())), 1e-12);
}

TEST(defer, every_gadget_is_deferral_equivalent) {
    for (const char *name : {"z_gadget", "s_gadget", "t_msi", "diagonal_uk(1)", "diagonal_uk(2)", "diagonal_uk(3)",
                             "diagonal_uk(4)", "hadamard_gadget_a", "hadamard_gadget_b", "teleport_gate(H)",
                             "teleport_gate(T)", "teleport_gate(S)"}) {
        const Gadget g = gadget_library(name);
        ASSERT_LT(choi_distance(deferred_channel(g), gadget_channel(g)), 1e-10) << name;
    }
}

TEST(defer, remeasured_qubit_gets_a_copy) {
    const Circuit c = parse_circuit(
        "qubits 2\ncbits 1\ngate H 0\nmeasure 0 -> 0\ngate H 0\ngate X 1 if 0==1\nmeasure 0 -> 0\n");
    const DeferredCircuit d = defer_measurements(c);
    ASSERT_EQ(d.extra_qubits, 1u);
    ASSERT_EQ(d.circuit.num_qubits(), 3u);
    // Wire 1 should be X^b with b a fair coin; wire 0 is the second H's output measured again.
    WireMap w{{0, 1}, {2}, {1}};
    const QuantumChannel deferred = circuit_channel(d.circuit, w, DensityMatrix::pure(named_state("0")));
    const QuantumChannel direct = circuit_channel(c, WireMap{{0, 1}, {}, {1}}, DensityMatrix::trusted(ComplexMatrix::identity(1)));
    ASSERT_LT(choi_distance(deferred, direct), 1e-12);
}
