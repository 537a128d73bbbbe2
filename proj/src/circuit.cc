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

#include <algorithm>
#include <set>

#include "coh/errors.h"
#include "coh/gates.h"

namespace coh {

Gate named_gate(const std::string &name, std::vector<std::size_t> targets) {
    auto m = gates::by_name(name);
    if (!m) {
        throw ShapeError("unknown gate '" + name + "'");
    }
    return Gate{name, std::move(*m), std::move(targets)};
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_cbits)
    : num_qubits_(num_qubits), num_cbits_(num_cbits), written_(num_cbits, false) {
}

namespace {

void check_wires(const std::vector<std::size_t> &wires, std::size_t n, std::set<std::size_t> &seen) {
    for (auto w : wires) {
        if (w >= n) {
            throw ShapeError("circuit: wire " + std::to_string(w) + " out of range");
        }
        if (!seen.insert(w).second) {
            throw ShapeError("circuit: wire " + std::to_string(w) + " used twice in one op");
        }
    }
}

void check_gate(const Gate &g, std::size_t n, std::set<std::size_t> &seen) {
    check_wires(g.targets, n, seen);
    const std::size_t d = std::size_t{1} << g.targets.size();
    if (g.matrix.rows() != d || g.matrix.cols() != d) {
        throw ShapeError("circuit: gate '" + g.name + "' matrix does not match its target count");
    }
}

}  // namespace

Circuit &Circuit::append(CircuitOp op) {
    std::set<std::size_t> seen;
    if (auto *g = std::get_if<Gate>(&op)) {
        check_gate(*g, num_qubits_, seen);
    } else if (auto *cg = std::get_if<ControlledGate>(&op)) {
        check_gate(cg->inner, num_qubits_, seen);
        check_wires(cg->controls, num_qubits_, seen);
        if (cg->triggers.empty()) {
            throw InvalidTriggerSet("circuit: empty trigger set");
        }
        for (auto t : cg->triggers) {
            if (t >= (std::size_t{1} << cg->controls.size())) {
                throw InvalidTriggerSet("circuit: trigger wider than the control register");
            }
        }
    } else if (auto *m = std::get_if<Measure>(&op)) {
        check_wires({m->qubit}, num_qubits_, seen);
        if (m->cbit >= num_cbits_) {
            throw ShapeError("circuit: classical bit " + std::to_string(m->cbit) + " out of range");
        }
        written_[m->cbit] = true;
    } else {
        auto &cc = std::get<ClassicallyControlledGate>(op);
        check_gate(cc.inner, num_qubits_, seen);
        if (cc.cbit >= num_cbits_) {
            throw ShapeError("circuit: classical bit " + std::to_string(cc.cbit) + " out of range");
        }
        if (!written_[cc.cbit]) {
            throw ShapeError("circuit: condition on unwritten classical bit " + std::to_string(cc.cbit));
        }
        if (cc.value != 0 && cc.value != 1) {
            throw ShapeError("circuit: classical condition value must be 0 or 1");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::gate(const std::string &name, std::vector<std::size_t> targets) {
    return append(named_gate(name, std::move(targets)));
}

Circuit &Circuit::gate(Gate g) {
    return append(std::move(g));
}

Circuit &Circuit::controlled(Gate inner, std::vector<std::size_t> controls, std::vector<std::size_t> triggers) {
    return append(ControlledGate{std::move(inner), std::move(controls), std::move(triggers)});
}

Circuit &Circuit::measure(std::size_t qubit, std::size_t cbit) {
    return append(Measure{qubit, cbit});
}

Circuit &Circuit::classically_controlled(Gate inner, std::size_t cbit, int value) {
    return append(ClassicallyControlledGate{std::move(inner), cbit, value});
}

void Circuit::resize(std::size_t num_qubits, std::size_t num_cbits) {
    if (num_qubits < num_qubits_ || num_cbits < num_cbits_) {
        throw ShapeError("circuit: resize cannot shrink the register");
    }
    num_qubits_ = num_qubits;
    num_cbits_ = num_cbits;
    written_.resize(num_cbits, false);
}

std::size_t Circuit::measurement_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const CircuitOp &op) { return std::holds_alternative<Measure>(op); }));
}

std::vector<std::size_t> op_targets(const CircuitOp &op) {
    return std::visit(
        [](const auto &o) -> std::vector<std::size_t> {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Gate>) {
                return o.targets;
            } else if constexpr (std::is_same_v<T, Measure>) {
                return {o.qubit};
            } else {
                return o.inner.targets;
            }
        },
        op);
}

}  // namespace coh
