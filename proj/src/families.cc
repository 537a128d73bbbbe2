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

#include "coh/families.h"

#include <cmath>
#include <numbers>

#include "coh/gates.h"
#include "coh/simulator.h"

namespace coh {

ComplexMatrix random_incoherent_unitary(std::size_t dim, Rng &rng) {
    const auto perm = random_permutation(dim, rng);
    ComplexMatrix u(dim, dim);
    for (std::size_t x = 0; x < dim; ++x) {
        u(perm[x], x) = std::polar(1.0, uniform_real(-std::numbers::pi, std::numbers::pi, rng));
    }
    return u;
}

namespace {

std::vector<std::size_t> distinct_wires(std::size_t n, std::size_t count, Rng &rng) {
    auto p = random_permutation(n, rng);
    p.resize(count);
    return p;
}

}  // namespace

Circuit random_incoherent_circuit(std::size_t num_qubits, std::size_t depth, Rng &rng) {
    Circuit c(num_qubits, 0);
    std::vector<std::string> pool{"X", "S", "T"};
    if (num_qubits >= 2) {
        pool.push_back("CNOT");
    }
    if (num_qubits >= 3) {
        pool.push_back("TOFFOLI");
    }
    for (std::size_t d = 0; d < depth; ++d) {
        const std::string &name = pool[uniform_index(pool.size(), rng)];
        const std::size_t arity = name == "CNOT" ? 2 : name == "TOFFOLI" ? 3 : 1;
        c.gate(name, distinct_wires(num_qubits, arity, rng));
    }
    return c;
}

CircuitOp random_hadamard_layer(std::size_t num_qubits, Rng &rng) {
    const auto order = random_permutation(num_qubits, rng);
    const std::size_t target = order[0];
    std::vector<std::size_t> controls;
    for (std::size_t j = 1; j < num_qubits; ++j) {
        if (uniform_index(2, rng)) {
            controls.push_back(order[j]);
        }
    }
    Gate h = named_gate("H", {target});
    if (controls.empty()) {
        return h;
    }
    const std::size_t patterns = std::size_t{1} << controls.size();
    std::vector<std::size_t> triggers;
    for (std::size_t x = 0; x < patterns; ++x) {
        if (uniform_index(2, rng)) {
            triggers.push_back(x);
        }
    }
    if (triggers.empty()) {
        triggers.push_back(uniform_index(patterns, rng));
    }
    return ControlledGate{std::move(h), std::move(controls), std::move(triggers)};
}

FamilySample alternating_product(const FamilySpec &spec, Rng &rng) {
    const std::size_t n = spec.num_qubits;
    FamilySample s;
    s.circuit = Circuit(n, 0);
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) {
        all[q] = q;
    }
    auto incoherent_block = [&] {
        const Circuit block = random_incoherent_circuit(n, spec.depth, rng);
        for (const auto &op : block.ops()) {
            s.circuit.append(op);
        }
        s.circuit.append(Gate{"PERM", random_incoherent_unitary(std::size_t{1} << n, rng), all});
    };
    incoherent_block();
    for (std::size_t i = 0; i < spec.k; ++i) {
        s.hadamard_ops.push_back(s.circuit.ops().size());
        s.circuit.append(random_hadamard_layer(n, rng));
        incoherent_block();
    }
    s.unitary = circuit_unitary(s.circuit);
    return s;
}

Circuit strip_hadamard_layers(const FamilySample &s) {
    Circuit out(s.circuit.num_qubits(), s.circuit.num_cbits());
    std::size_t next = 0;
    for (std::size_t i = 0; i < s.circuit.ops().size(); ++i) {
        if (next < s.hadamard_ops.size() && s.hadamard_ops[next] == i) {
            ++next;
            continue;
        }
        out.append(s.circuit.ops()[i]);
    }
    return out;
}

std::string ancilla_kind(std::size_t variant) {
    switch (variant % 4) {
        case 0:
            return "haar_pure";
        case 1:
            return "wishart_mixed";
        case 2:
            return "incoherent";
        default:
            return "plus";
    }
}

DensityMatrix random_ancilla(std::size_t qubits, std::size_t variant, Rng &rng) {
    const std::size_t d = std::size_t{1} << qubits;
    switch (variant % 4) {
        case 0:
            return DensityMatrix::pure(haar_state(d, rng));
        case 1:
            return wishart_state(d, rng);
        case 2: {
            std::vector<double> p(d);
            double total = 0;
            for (auto &x : p) {
                x = uniform_real(0.0, 1.0, rng);
                total += x;
            }
            for (auto &x : p) {
                x /= total;
            }
            ComplexMatrix m(d, d);
            for (std::size_t k = 0; k < d; ++k) {
                m(k, k) = p[k];
            }
            return DensityMatrix(std::move(m));
        }
        default:
            return DensityMatrix::pure(plus_state(qubits));
    }
}

}  // namespace coh
