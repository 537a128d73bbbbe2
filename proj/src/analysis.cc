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

#include "coh/analysis.h"

#include "coh/circuit_parser.h"
#include "coh/coherence.h"
#include "coh/errors.h"
#include "coh/gates.h"

namespace coh {

std::string to_string(OpClass c) {
    switch (c) {
        case OpClass::Incoherent:
            return "incoherent";
        case OpClass::Hadamard:
            return "hadamard";
        case OpClass::ControlledHadamard:
            return "controlled-hadamard";
        case OpClass::Measurement:
            return "measurement";
        case OpClass::Unclassifiable:
            break;
    }
    return "unclassifiable";
}

namespace {

bool is_incoherent(const ComplexMatrix &m, double tol) {
    return is_unitary(m, tol) && classify_incoherent_unitary(m, tol).has_value();
}

bool is_hadamard(const ComplexMatrix &m, double tol) {
    return m.rows() == 2 && equal_up_to_phase(m, gates::H(), tol);
}

// Two-qubit matrix of the form Σ_{x∈S}|x⟩⟨x| ⊗ H + Σ_{x∉S}|x⟩⟨x| ⊗ 1 on either wire order.
bool is_two_qubit_controlled_hadamard(const ComplexMatrix &m, double tol) {
    if (m.rows() != 4) {
        return false;
    }
    const std::size_t trigger_sets[] = {1, 2, 3};
    for (std::size_t bits : trigger_sets) {
        std::vector<std::size_t> s;
        for (std::size_t x = 0; x < 2; ++x) {
            if ((bits >> x) & 1U) {
                s.push_back(x);
            }
        }
        const ComplexMatrix cu = gates::controlled_unitary(gates::H(), 1, s);
        if (equal_up_to_phase(m, cu, tol) || equal_up_to_phase(m, gates::SWAP() * cu * gates::SWAP(), tol)) {
            return true;
        }
    }
    return false;
}

}  // namespace

OpClass classify_op(const CircuitOp &op, double tol) {
    if (std::holds_alternative<Measure>(op)) {
        return OpClass::Measurement;
    }
    const bool controlled = !std::holds_alternative<Gate>(op);
    const Gate &g = std::holds_alternative<Gate>(op)                ? std::get<Gate>(op)
                    : std::holds_alternative<ControlledGate>(op) ? std::get<ControlledGate>(op).inner
                                                                  : std::get<ClassicallyControlledGate>(op).inner;
    if (is_incoherent(g.matrix, tol)) {
        return OpClass::Incoherent;
    }
    if (is_hadamard(g.matrix, tol)) {
        return controlled ? OpClass::ControlledHadamard : OpClass::Hadamard;
    }
    if (is_two_qubit_controlled_hadamard(g.matrix, tol)) {
        return OpClass::ControlledHadamard;
    }
    return OpClass::Unclassifiable;
}

std::size_t hadamard_count(const Circuit &c, double tol) {
    std::size_t k = 0;
    std::string bad;
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        switch (classify_op(c.ops()[i], tol)) {
            case OpClass::Hadamard:
            case OpClass::ControlledHadamard:
                ++k;
                break;
            case OpClass::Unclassifiable:
                bad += (bad.empty() ? "" : "; ") + std::string("op ") + std::to_string(i) + " (" +
                       describe_op(c.ops()[i]) + ")";
                break;
            default:
                break;
        }
    }
    if (!bad.empty()) {
        throw UnclassifiableGate("gates neither incoherent nor (controlled-)Hadamard: " + bad);
    }
    return k;
}

std::string describe_op(const CircuitOp &op) {
    std::size_t nq = 0;
    std::size_t nc = 0;
    for (auto q : op_targets(op)) {
        nq = std::max(nq, q + 1);
    }
    if (const auto *cg = std::get_if<ControlledGate>(&op)) {
        for (auto q : cg->controls) {
            nq = std::max(nq, q + 1);
        }
    }
    if (const auto *m = std::get_if<Measure>(&op)) {
        nc = m->cbit + 1;
    }
    if (const auto *cc = std::get_if<ClassicallyControlledGate>(&op)) {
        nc = cc->cbit + 1;
    }
    // Rendered through a one-op circuit. Conditions are appended by hand since the bit is unwritten there.
    std::string text;
    if (const auto *cc = std::get_if<ClassicallyControlledGate>(&op)) {
        Circuit tmp(nq, 0);
        tmp.append(cc->inner);
        text = format_circuit(tmp);
        text = text.substr(text.find('\n') + 1);
        text.pop_back();
        return text + " if " + std::to_string(cc->cbit) + "==" + std::to_string(cc->value);
    }
    Circuit tmp(nq, nc);
    tmp.append(op);
    text = format_circuit(tmp);
    text = text.substr(text.find('\n') + 1);
    if (nc) {
        text = text.substr(text.find('\n') + 1);
    }
    text.pop_back();
    return text;
}

}  // namespace coh
