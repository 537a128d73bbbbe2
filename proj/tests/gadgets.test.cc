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

#include "coh/gadgets.h"

#include <chrono>

#include "gtest/gtest.h"

#include "coh/analysis.h"
#include "coh/circuit_parser.h"
#include "coh/coherence.h"
#include "coh/errors.h"
#include "coh/gates.h"
#include "coh/rng.h"
#include "coh/simulator.h"

using namespace coh;

TEST(gadgets, t_msi_shape) {
    const Gadget g = t_msi();
    ASSERT_EQ(g.circuit.num_qubits(), 2u);
    ASSERT_EQ(g.circuit.num_cbits(), 1u);
    ASSERT_EQ(format_circuit(g.circuit), "qubits 2\ncbits 1\ngate CNOT 0 1\nmeasure 1 -> 0\ngate S 0 if 0==1\n");
    ASSERT_EQ(g.ancilla_spec, "T");
    ASSERT_EQ(g.target, gates::T());
}

TEST(gadgets, diagonal_u1_is_z_gadget) {
    const Gadget u1 = diagonal_uk(1);
    const Gadget z = z_gadget();
    ASSERT_EQ(format_circuit(u1.circuit), format_circuit(z.circuit));
    ASSERT_LT(max_abs_diff(u1.ancilla.projector(), named_state("-").projector()), 1e-15);
    ASSERT_LT(max_abs_diff(u1.target, gates::Z()), 1e-15);
}

TEST(gadgets, dyadic_phase_ladder) {
    ASSERT_LT(max_abs_diff(gates::dyadic_phase(1), gates::Z()), 1e-15);
    ASSERT_LT(max_abs_diff(gates::dyadic_phase(2), gates::S()), 1e-15);
    ASSERT_LT(max_abs_diff(gates::dyadic_phase(3), gates::T()), 1e-15);
}

TEST(gadgets, library_passes) {
    for (const char *name : {"z_gadget", "s_gadget", "t_msi", "diagonal_uk(1)", "diagonal_uk(2)", "diagonal_uk(3)",
                             "diagonal_uk(4)", "hadamard_gadget_a", "hadamard_gadget_b", "teleport_gate(H)",
                             "teleport_gate(T)", "teleport_gate(S)", "teleport_gate(X)"}) {
        const GadgetCheck r = verify_gadget(gadget_library(name));
        ASSERT_TRUE(r.passed) << name;
        ASSERT_LE(r.choi_distance, 1e-9) << name;
        ASSERT_LE(r.max_state_distance, 1e-9) << name;
    }
}

TEST(gadgets, branch_counts) {
    ASSERT_EQ(verify_gadget(t_msi()).branches, 2u);
    ASSERT_EQ(verify_gadget(s_gadget()).branches, 4u);
    ASSERT_EQ(verify_gadget(diagonal_uk(4)).branches, 16u);
    ASSERT_EQ(verify_gadget(gadget_library("teleport_gate(H)")).branches, 4u);
}

TEST(gadgets, wrong_ancilla_fails) {
    Gadget g = t_msi();
    g.ancilla = named_state("0");
    const GadgetCheck r = verify_gadget(g);
    ASSERT_FALSE(r.passed);
    ASSERT_NEAR(r.choi_distance, 0.5, 1e-12);
}

TEST(gadgets, hadamard_gadget_without_x_measurement_fails) {
    // Dropping the basis change before the measurement leaves only incoherent pieces.
    Gadget g = hadamard_gadget_b();
    Circuit c(2, 1);
    c.gate("CZ", {0, 1}).measure(1, 0);
    c.classically_controlled(named_gate("X", {0}), 0, 1);
    g.circuit = c;
    const GadgetCheck r = verify_gadget(g);
    ASSERT_FALSE(r.passed);
    ASSERT_GE(r.choi_distance, 0.5 - 1e-12);
}

TEST(gadgets, teleport_h_uses_pauli_corrections) {
    const Gadget g = gadget_library("teleport_gate(H)");
    for (const auto &op : g.circuit.ops()) {
        ASSERT_FALSE(std::holds_alternative<ControlledGate>(op));
    }
}

TEST(gadgets, unknown_names) {
    ASSERT_THROW(gadget_library("nope"), UnknownGadget);
    ASSERT_THROW(gadget_library("diagonal_uk(0)"), UnknownGadget);
    ASSERT_THROW(gadget_library("teleport_gate(FOO)"), UnknownGadget);
    ASSERT_THROW(teleport_gate(gates::CNOT(), "CNOT"), UnknownGadget);
}

TEST(gadgets, suite_runtime) {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 1; k <= 4; ++k) {
        verify_gadget(diagonal_uk(k));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ASSERT_LT(secs, 5.0);
}

TEST(analysis, clifford_t_with_three_h) {
    const Circuit c = parse_circuit("qubits 2\ngate H 0\ngate T 0\ngate H 1\ngate CNOT 0 1\ngate H 0\ngate S 1\n");
    ASSERT_EQ(hadamard_count(c), 3u);
}

TEST(analysis, gadget_counts) {
    ASSERT_EQ(hadamard_count(t_msi().circuit), 0u);
    ASSERT_EQ(hadamard_count(z_gadget().circuit), 0u);
    ASSERT_EQ(hadamard_count(hadamard_gadget_a().circuit), 1u);
    ASSERT_EQ(hadamard_count(hadamard_gadget_b().circuit), 1u);
    const Gadget msi = t_msi();
    for (const auto &op : msi.circuit.ops()) {
        const OpClass k = classify_op(op);
        ASSERT_TRUE(k == OpClass::Incoherent || k == OpClass::Measurement);
    }
}

TEST(analysis, controlled_hadamards) {
    const Circuit c = parse_circuit(
        "qubits 2\ncbits 1\n"
        "cgate H 1 ctrl 0 when 1\n"
        "measure 0 -> 0\n"
        "gate H 1 if 0==1\n"
        "gate U4:1,0,0,0,0,1,0,0,0,0,0.7071067811865476,0.7071067811865476,0,0,0.7071067811865476,-0.7071067811865476 0 1\n");
    for (std::size_t i : {0, 2, 3}) {
        ASSERT_EQ(classify_op(c.ops()[i]), OpClass::ControlledHadamard) << i;
    }
    ASSERT_EQ(hadamard_count(c), 3u);
}

TEST(analysis, phase_shifted_h_is_hadamard) {
    Circuit c(1, 0);
    c.gate(Gate{"U2", Complex(0, 1) * gates::H(), {0}});
    ASSERT_EQ(classify_op(c.ops()[0]), OpClass::Hadamard);
}

TEST(analysis, unclassifiable_lists_ops) {
    Rng rng(151);
    Circuit c(2, 0);
    c.gate("X", {0});
    c.gate(Gate{"U2", haar_unitary(2, rng), {1}});
    c.gate("H", {0});
    c.gate(Gate{"U4", haar_unitary(4, rng), {0, 1}});
    ASSERT_EQ(classify_op(c.ops()[1]), OpClass::Unclassifiable);
    try {
        hadamard_count(c);
        FAIL();
    } catch (const UnclassifiableGate &e) {
        const std::string msg = e.what();
        ASSERT_NE(msg.find("1"), std::string::npos);
        ASSERT_NE(msg.find("3"), std::string::npos);
    }
}

TEST(analysis, describe_op) {
    const Circuit c = parse_circuit("qubits 3\ncbits 1\ncgate X 2 ctrl 0 1 when 11\nmeasure 0 -> 0\ngate Z 1 if 0==1\n");
    ASSERT_EQ(describe_op(c.ops()[0]), "cgate X 2 ctrl 0 1 when 11");
    ASSERT_EQ(describe_op(c.ops()[1]), "measure 0 -> 0");
    ASSERT_EQ(describe_op(c.ops()[2]), "gate Z 1 if 0==1");
}
