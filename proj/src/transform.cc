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

#include "coh/transform.h"

#include <algorithm>
#include <map>

#include "coh/gates.h"

namespace coh {

DeferredCircuit defer_measurements(const Circuit &c) {
    const auto &ops = c.ops();
    // A measurement needs a copy if its qubit is later a target or measured again, or its bit is rewritten.
    std::vector<bool> needs_copy(ops.size(), false);
    std::size_t extra = 0;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto *m = std::get_if<Measure>(&ops[k]);
        if (!m) {
            continue;
        }
        for (std::size_t later = k + 1; later < ops.size() && !needs_copy[k]; ++later) {
            const auto touched = op_targets(ops[later]);
            if (std::find(touched.begin(), touched.end(), m->qubit) != touched.end()) {
                needs_copy[k] = true;
            }
            if (const auto *m2 = std::get_if<Measure>(&ops[later]); m2 && m2->cbit == m->cbit) {
                needs_copy[k] = true;
            }
        }
        extra += needs_copy[k] ? 1 : 0;
    }

    const std::size_t n = c.num_qubits();
    Circuit out(n + extra, c.num_cbits());
    std::map<std::size_t, std::size_t> holder;  // cbit -> qubit currently carrying its value
    std::vector<Measure> terminal;
    std::size_t next_fresh = n;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto &op = ops[k];
        if (const auto *m = std::get_if<Measure>(&op)) {
            std::size_t q = m->qubit;
            if (needs_copy[k]) {
                q = next_fresh++;
                out.append(Gate{"CNOT", gates::CNOT(), {m->qubit, q}});
            }
            holder[m->cbit] = q;
            terminal.push_back(Measure{q, m->cbit});
        } else if (const auto *cc = std::get_if<ClassicallyControlledGate>(&op)) {
            out.append(ControlledGate{cc->inner, {holder.at(cc->cbit)}, {static_cast<std::size_t>(cc->value)}});
        } else {
            out.append(op);
        }
    }
    for (const auto &m : terminal) {
        out.append(m);
    }
    return DeferredCircuit{std::move(out), extra};
}

}  // namespace coh
