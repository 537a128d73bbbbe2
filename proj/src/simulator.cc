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

#include <algorithm>
#include <cmath>
#include <optional>

#include "coh/eig.h"
#include "coh/errors.h"
#include "coh/rng.h"

namespace coh {

void apply_gate(
    std::span<Complex> amps, std::size_t n, const ComplexMatrix &m, std::span<const std::size_t> targets,
    std::span<const std::size_t> controls, std::span<const std::size_t> triggers) {
    const std::size_t dim = std::size_t{1} << n;
    if (amps.size() != dim) {
        throw ShapeError("apply_gate: amplitude count is not 2^n");
    }
    const std::size_t k = targets.size();
    const std::size_t sub = std::size_t{1} << k;
    std::vector<std::size_t> tmask(k);
    std::size_t all_targets = 0;
    for (std::size_t j = 0; j < k; ++j) {
        tmask[j] = std::size_t{1} << (n - 1 - targets[j]);
        all_targets |= tmask[j];
    }
    std::vector<bool> fire;
    if (!controls.empty()) {
        fire.assign(std::size_t{1} << controls.size(), false);
        for (auto t : triggers) {
            fire.at(t) = true;
        }
    }
    std::vector<std::size_t> idx(sub);
    ComplexVector in(sub);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & all_targets) {
            continue;
        }
        if (!controls.empty()) {
            std::size_t pattern = 0;
            for (auto c : controls) {
                pattern = 2 * pattern + ((base >> (n - 1 - c)) & 1U);
            }
            if (!fire[pattern]) {
                continue;
            }
        }
        for (std::size_t j = 0; j < sub; ++j) {
            std::size_t full = base;
            for (std::size_t b = 0; b < k; ++b) {
                if ((j >> (k - 1 - b)) & 1U) {
                    full |= tmask[b];
                }
            }
            idx[j] = full;
            in[j] = amps[full];
        }
        for (std::size_t r = 0; r < sub; ++r) {
            Complex s = 0;
            for (std::size_t c = 0; c < sub; ++c) {
                s += m(r, c) * in[c];
            }
            amps[idx[r]] = s;
        }
    }
}

namespace {

// Branch state over a batch of columns, so one walk serves both statevector and operator simulation.
struct Walk {
    std::string record;
    std::vector<int> cbits;
    std::vector<ComplexVector> columns;
};

double weight(const Walk &w) {
    double worst = 0;
    for (const auto &col : w.columns) {
        double s = 0;
        for (const auto &z : col) {
            s += std::norm(z);
        }
        worst = std::max(worst, s);
    }
    return worst;
}

void apply_unitary_op(Walk &w, std::size_t n, const CircuitOp &op) {
    const Gate *g = nullptr;
    std::span<const std::size_t> controls;
    std::span<const std::size_t> triggers;
    if (auto *plain = std::get_if<Gate>(&op)) {
        g = plain;
    } else if (auto *cg = std::get_if<ControlledGate>(&op)) {
        g = &cg->inner;
        controls = cg->controls;
        triggers = cg->triggers;
    } else {
        const auto &cc = std::get<ClassicallyControlledGate>(op);
        if (w.cbits[cc.cbit] != cc.value) {
            return;
        }
        g = &cc.inner;
    }
    for (auto &col : w.columns) {
        apply_gate(col, n, g->matrix, g->targets, controls, triggers);
    }
}

Walk project(const Walk &w, std::size_t n, const Measure &m, int bit) {
    Walk out = w;
    out.record += static_cast<char>('0' + bit);
    out.cbits[m.cbit] = bit;
    const std::size_t mask = std::size_t{1} << (n - 1 - m.qubit);
    for (auto &col : out.columns) {
        for (std::size_t x = 0; x < col.size(); ++x) {
            if (((x & mask) != 0) != (bit == 1)) {
                col[x] = 0;
            }
        }
    }
    return out;
}

std::vector<Walk> run(const Circuit &c, Walk start, double prune, Rng *sampler) {
    const std::size_t n = c.num_qubits();
    std::vector<Walk> walks{std::move(start)};
    for (const auto &op : c.ops()) {
        if (auto *m = std::get_if<Measure>(&op)) {
            std::vector<Walk> next;
            for (const auto &w : walks) {
                Walk zero = project(w, n, *m, 0);
                Walk one = project(w, n, *m, 1);
                if (sampler) {
                    const double p0 = weight(zero);
                    const double p1 = weight(one);
                    const double u = static_cast<double>((*sampler)() >> 11) * 0x1.0p-53 * (p0 + p1);
                    next.push_back(u < p0 ? std::move(zero) : std::move(one));
                    continue;
                }
                for (auto *b : {&zero, &one}) {
                    if (weight(*b) >= prune) {
                        next.push_back(std::move(*b));
                    }
                }
            }
            walks = std::move(next);
        } else {
            for (auto &w : walks) {
                apply_unitary_op(w, n, op);
            }
        }
    }
    std::stable_sort(walks.begin(), walks.end(), [](const Walk &a, const Walk &b) { return a.record < b.record; });
    return walks;
}

}  // namespace

SimOutcome simulate(const Circuit &c, const PureState &input, SimMode mode, double prune) {
    if (input.dim() != (std::size_t{1} << c.num_qubits())) {
        throw ShapeError("simulate: input dimension does not match the circuit register");
    }
    Walk start{"", std::vector<int>(c.num_cbits(), -1), {ComplexVector(input.amplitudes().begin(), input.amplitudes().end())}};
    std::optional<Rng> rng;
    if (mode.kind == SimMode::Kind::Sample) {
        rng.emplace(mode.seed);
    }
    SimOutcome out;
    for (auto &w : run(c, std::move(start), prune, rng ? &*rng : nullptr)) {
        const double p = weight(w);
        if (p < prune) {
            continue;
        }
        out.branches.push_back(SimBranch{w.record, w.cbits, p, PureState::normalized(std::move(w.columns[0]))});
    }
    return out;
}

std::vector<BranchOperator> branch_operators(const Circuit &c, double prune) {
    const std::size_t dim = std::size_t{1} << c.num_qubits();
    Walk start{"", std::vector<int>(c.num_cbits(), -1), {}};
    start.columns.reserve(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        ComplexVector e(dim);
        e[x] = 1;
        start.columns.push_back(std::move(e));
    }
    std::vector<BranchOperator> out;
    for (auto &w : run(c, std::move(start), prune, nullptr)) {
        ComplexMatrix op(dim, dim);
        for (std::size_t x = 0; x < dim; ++x) {
            for (std::size_t r = 0; r < dim; ++r) {
                op(r, x) = w.columns[x][r];
            }
        }
        out.push_back(BranchOperator{w.record, w.cbits, std::move(op)});
    }
    return out;
}

ComplexMatrix circuit_unitary(const Circuit &c) {
    if (c.measurement_count() != 0) {
        throw ShapeError("circuit_unitary: circuit contains measurements");
    }
    return branch_operators(c, 0).front().op;
}

Circuit strip_terminal_measurements(const Circuit &c) {
    std::size_t end = c.ops().size();
    while (end > 0 && std::holds_alternative<Measure>(c.ops()[end - 1])) {
        --end;
    }
    Circuit out(c.num_qubits(), c.num_cbits());
    for (std::size_t k = 0; k < end; ++k) {
        out.append(c.ops()[k]);
    }
    return out;
}

QuantumChannel circuit_channel(const Circuit &c, const WireMap &wires, const DensityMatrix &ancilla) {
    const std::size_t n = c.num_qubits();
    std::vector<int> role(n, -1);
    for (auto w : wires.input) {
        if (w >= n || role[w] != -1) {
            throw ShapeError("circuit_channel: input wires must be distinct and in range");
        }
        role[w] = 0;
    }
    for (auto w : wires.ancilla) {
        if (w >= n || role[w] != -1) {
            throw ShapeError("circuit_channel: ancilla wires must be distinct, in range and disjoint from inputs");
        }
        role[w] = 1;
    }
    if (std::count(role.begin(), role.end(), -1) != 0) {
        throw ShapeError("circuit_channel: input and ancilla wires must cover the register");
    }
    if (ancilla.dim() != (std::size_t{1} << wires.ancilla.size())) {
        throw ShapeError("circuit_channel: ancilla state dimension does not match the ancilla wires");
    }
    std::vector<bool> is_out(n, false);
    for (auto w : wires.output) {
        if (w >= n || is_out[w]) {
            throw ShapeError("circuit_channel: output wires must be distinct and in range");
        }
        is_out[w] = true;
    }
    std::vector<std::size_t> traced;
    for (std::size_t w = 0; w < n; ++w) {
        if (!is_out[w]) {
            traced.push_back(w);
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t din = std::size_t{1} << wires.input.size();
    const std::size_t dout = std::size_t{1} << wires.output.size();
    const std::size_t dt = std::size_t{1} << traced.size();

    auto gather = [n](std::size_t full, const std::vector<std::size_t> &ws) {
        std::size_t v = 0;
        for (auto w : ws) {
            v = 2 * v + ((full >> (n - 1 - w)) & 1U);
        }
        return v;
    };
    auto scatter = [n](std::size_t value, const std::vector<std::size_t> &ws) {
        std::size_t full = 0;
        for (std::size_t j = 0; j < ws.size(); ++j) {
            if ((value >> (ws.size() - 1 - j)) & 1U) {
                full |= std::size_t{1} << (n - 1 - ws[j]);
            }
        }
        return full;
    };

    const HermitianEig spectrum = hermitian_eig(ancilla.matrix());
    std::vector<ComplexMatrix> kraus;
    for (const auto &branch : branch_operators(c)) {
        for (std::size_t j = 0; j < ancilla.dim(); ++j) {
            const double lambda = spectrum.eigenvalues[j];
            if (lambda <= 1e-24) {
                continue;
            }
            // L (I ⊗ √λ|e_j⟩) with the embedding scattered onto the register wires.
            ComplexMatrix m(dim, din);
            for (std::size_t x = 0; x < din; ++x) {
                const std::size_t xin = scatter(x, wires.input);
                for (std::size_t e = 0; e < ancilla.dim(); ++e) {
                    const Complex amp = std::sqrt(lambda) * spectrum.eigenvectors(e, j);
                    if (amp == Complex{}) {
                        continue;
                    }
                    const std::size_t col = xin | scatter(e, wires.ancilla);
                    for (std::size_t r = 0; r < dim; ++r) {
                        m(r, x) += branch.op(r, col) * amp;
                    }
                }
            }
            std::vector<ComplexMatrix> block(dt, ComplexMatrix(dout, din));
            for (std::size_t r = 0; r < dim; ++r) {
                const std::size_t o = gather(r, wires.output);
                const std::size_t t = gather(r, traced);
                for (std::size_t x = 0; x < din; ++x) {
                    block[t](o, x) = m(r, x);
                }
            }
            for (auto &k : block) {
                kraus.push_back(std::move(k));
            }
        }
    }
    return QuantumChannel(din, dout, prune_kraus(std::move(kraus), 1e-12));
}

}  // namespace coh
