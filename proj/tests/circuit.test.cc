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

#include "coh/circuit.h"

#include "gtest/gtest.h"

#include "coh/circuit_parser.h"
#include "coh/coherence.h"
#include "coh/errors.h"
#include "coh/gates.h"

using namespace coh;

TEST(circuit, builder_validates_wires) {
    Circuit c(2, 1);
    ASSERT_THROW(c.gate("H", {2}), ShapeError);
    ASSERT_THROW(c.gate("CNOT", {0, 0}), ShapeError);
    ASSERT_THROW(c.measure(0, 1), ShapeError);
    ASSERT_THROW(c.classically_controlled(named_gate("X", {0}), 0), ShapeError);
    c.measure(1, 0);
    ASSERT_NO_THROW(c.classically_controlled(named_gate("X", {0}), 0));
    ASSERT_EQ(c.measurement_count(), 1u);
    ASSERT_EQ(op_targets(c.ops()[1]), (std::vector<std::size_t>{0}));
}

TEST(circuit, unknown_gate_name) {
    ASSERT_THROW(named_gate("FOO", {0}), ShapeError);
}

TEST(controlled_unitary, x_with_one_control_is_cnot) {
    const std::vector<std::size_t> s{1};
    ASSERT_EQ(gates::controlled_unitary(gates::X(), 1, s), gates::CNOT());
}

TEST(controlled_unitary, controlled_h_is_coherent) {
    const std::vector<std::size_t> s{1};
    ASSERT_FALSE(classify_incoherent_unitary(gates::controlled_unitary(gates::H(), 1, s)).has_value());
}

TEST(controlled_unitary, t_on_two_controls_is_incoherent) {
    const std::vector<std::size_t> s{0b00, 0b11};
    const ComplexMatrix m = gates::controlled_unitary(gates::T(), 2, s);
    ASSERT_EQ(m.rows(), 8u);
    const auto d = classify_incoherent_unitary(m);
    ASSERT_TRUE(d.has_value());
    for (std::size_t x = 0; x < 8; ++x) {
        ASSERT_EQ(d->permutation[x], x);
    }
}

TEST(controlled_unitary, full_trigger_set_is_unconditional) {
    const std::vector<std::size_t> s{0, 1};
    ASSERT_EQ(gates::controlled_unitary(gates::S(), 1, s), kron(gates::I(), gates::S()));
}

TEST(controlled_unitary, errors) {
    const std::vector<std::size_t> none;
    const std::vector<std::size_t> wide{4};
    const std::vector<std::size_t> one{1};
    ASSERT_THROW(gates::controlled_unitary(gates::X(), 1, none), InvalidTriggerSet);
    ASSERT_THROW(gates::controlled_unitary(gates::X(), 2, wide), InvalidTriggerSet);
    ASSERT_THROW(gates::controlled_unitary(ComplexMatrix{{1, 1}, {0, 1}}, 1, one), NotUnitary);
}

TEST(parser, single_gate) {
    const Circuit c = parse_circuit("qubits 1\ngate H 0");
    ASSERT_EQ(c.num_qubits(), 1u);
    ASSERT_EQ(c.num_cbits(), 0u);
    ASSERT_EQ(c.ops().size(), 1u);
    ASSERT_TRUE(std::holds_alternative<Gate>(c.ops()[0]));
}

TEST(parser, msi_source) {
    const Circuit c = parse_circuit(R"QC(
        # magic state injection
        qubits 2
        cbits 1
        gate CNOT 0 1
        measure 1 -> 0
        gate S 0 if 0==1
    )QC");
    ASSERT_EQ(c.num_qubits(), 2u);
    ASSERT_EQ(c.num_cbits(), 1u);
    ASSERT_EQ(c.ops().size(), 3u);
    ASSERT_TRUE(std::holds_alternative<Measure>(c.ops()[1]));
    const auto &cc = std::get<ClassicallyControlledGate>(c.ops()[2]);
    ASSERT_EQ(cc.cbit, 0u);
    ASSERT_EQ(cc.value, 1);
    ASSERT_EQ(cc.inner.name, "S");
}

TEST(parser, cgate_trigger_sets) {
    const Circuit c = parse_circuit("qubits 3\ncgate T 2 ctrl 0 1 when 00,11\n");
    const auto &g = std::get<ControlledGate>(c.ops()[0]);
    ASSERT_EQ(g.controls, (std::vector<std::size_t>{0, 1}));
    ASSERT_EQ(g.triggers, (std::vector<std::size_t>{0b00, 0b11}));
    ASSERT_EQ(g.inner.targets, (std::vector<std::size_t>{2}));
}

TEST(parser, unitary_literals) {
    const Circuit c = parse_circuit(
        "qubits 2\n"
        "gate U2:0.7071067811865476,0.7071067811865476,0.7071067811865476,-0.7071067811865476 1\n"
        "gate U4:1,0,0,0,0,1,0,0,0,0,0,i,0,0,-i,0 0 1\n");
    ASSERT_TRUE(equal_up_to_phase(std::get<Gate>(c.ops()[0]).matrix, gates::H(), 1e-12));
    const ComplexMatrix expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, Complex(0, 1)}, {0, 0, Complex(0, -1), 0}};
    ASSERT_EQ(std::get<Gate>(c.ops()[1]).matrix, expected);
}

TEST(parser, errors_carry_location) {
    auto kind_of = [](const char *text) {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            return std::make_pair(e.kind, e.line);
        }
        return std::make_pair(ParseError::Kind::Syntax, std::size_t{0});
    };
    ASSERT_EQ(kind_of("qubits 2\ngate H 5"), std::make_pair(ParseError::Kind::WireRange, std::size_t{2}));
    ASSERT_EQ(kind_of("qubits 1\n\ngate FOO 0"), std::make_pair(ParseError::Kind::UnknownGate, std::size_t{3}));
    ASSERT_EQ(kind_of("qubits 2\ncbits 1\ngate X 0 if 0==1"), std::make_pair(ParseError::Kind::UnwrittenBit, std::size_t{3}));
    ASSERT_EQ(kind_of("qubits 2\ncbits 1\nmeasure 1 0"), std::make_pair(ParseError::Kind::Syntax, std::size_t{3}));
    ASSERT_EQ(kind_of("gate H 0"), std::make_pair(ParseError::Kind::Syntax, std::size_t{1}));
    ASSERT_EQ(kind_of("qubits 1\ngate U2:1,1,1,1 0"), std::make_pair(ParseError::Kind::Syntax, std::size_t{2}));
    ASSERT_EQ(kind_of("qubits 1\ngate CNOT 0"), std::make_pair(ParseError::Kind::Syntax, std::size_t{2}));
}

TEST(parser, error_column) {
    try {
        parse_circuit("qubits 2\ngate H 7\n");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.line, 2u);
        ASSERT_EQ(e.column, 8u);
    }
}

TEST(parser, format_round_trip) {
    const char *src =
        "qubits 3\n"
        "cbits 2\n"
        "gate H 0\n"
        "cgate X 2 ctrl 0 1 when 01,10\n"
        "measure 0 -> 1\n"
        "gate Z 1 if 1==0\n"
        "gate U2:0,1,i,0 2\n";
    const Circuit a = parse_circuit(src);
    const Circuit b = parse_circuit(format_circuit(a));
    ASSERT_EQ(format_circuit(a), format_circuit(b));
    ASSERT_EQ(a.ops().size(), b.ops().size());
}

TEST(parser, complex_literals) {
    Complex z;
    ASSERT_TRUE(parse_complex("i", z));
    ASSERT_EQ(z, Complex(0, 1));
    ASSERT_TRUE(parse_complex("-0.5i", z));
    ASSERT_EQ(z, Complex(0, -0.5));
    ASSERT_TRUE(parse_complex("0.5-0.25j", z));
    ASSERT_EQ(z, Complex(0.5, -0.25));
    ASSERT_TRUE(parse_complex("1e-3", z));
    ASSERT_EQ(z, Complex(1e-3, 0));
    ASSERT_FALSE(parse_complex("", z));
    ASSERT_FALSE(parse_complex("abc", z));
}

TEST(parser, missing_file) {
    ASSERT_THROW(parse_circuit_file("/nonexistent/path.qc"), std::runtime_error);
}
