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

#include <array>
#include <cmath>
#include <numbers>
#include <regex>

#include "coh/distance.h"
#include "coh/errors.h"
#include "coh/gates.h"
#include "coh/rng.h"

namespace coh {

std::vector<std::string> gadget_names() {
    return {"z_gadget",          "s_gadget",          "t_msi",           "diagonal_uk(k)",
            "hadamard_gadget_a", "hadamard_gadget_b", "teleport_gate(U)"};
}

Gadget z_gadget() {
    Circuit c(2, 1);
    c.gate("CNOT", {0, 1}).measure(1, 0);
    return Gadget{"z_gadget", std::move(c), {{0}, {1}, {0}}, "-", named_state("-"), gates::Z()};
}

Gadget s_gadget() {
    Circuit c(3, 2);
    c.gate("CNOT", {0, 2}).measure(2, 0);
    c.classically_controlled(named_gate("CNOT", {0, 1}), 0, 1);
    c.measure(1, 1);
    return Gadget{"s_gadget", std::move(c), {{0}, {1, 2}, {0}}, "-*+i", state_from_spec("-*+i"), gates::S()};
}

Gadget t_msi() {
    Circuit c(2, 1);
    c.gate("CNOT", {0, 1}).measure(1, 0);
    c.classically_controlled(named_gate("S", {0}), 0, 1);
    return Gadget{"t_msi", std::move(c), {{0}, {1}, {0}}, "T", named_state("T"), gates::T()};
}

Gadget diagonal_uk(std::size_t k) {
    if (k == 0 || k > 10) {
        throw UnknownGadget("diagonal_uk: k must lie in [1, 10]");
    }
    // Wire j (1 ≤ j ≤ k) holds U_{k+1−j}|+⟩; level j is consumed only if every earlier outcome was 1.
    Circuit c(k + 1, k);
    PureState ancilla({Complex{1}});
    std::string spec;
    std::vector<std::size_t> ancilla_wires;
    for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t level = k + 1 - j;
        const ComplexMatrix u = gates::dyadic_phase(level);
        ancilla = tensor(ancilla, PureState(u * plus_state(1).amplitudes()));
        spec += (j > 1 ? "*" : "") + std::string("U") + std::to_string(level) + "+";
        ancilla_wires.push_back(j);

        Gate cnot = named_gate("CNOT", {0, j});
        if (j == 1) {
            c.gate(std::move(cnot));
        } else if (j == 2) {
            c.classically_controlled(std::move(cnot), 0, 1);
        } else {
            std::vector<std::size_t> measured;
            for (std::size_t w = 1; w < j; ++w) {
                measured.push_back(w);
            }
            const std::size_t all_ones = (std::size_t{1} << measured.size()) - 1;
            c.controlled(std::move(cnot), std::move(measured), {all_ones});
        }
        c.measure(j, j - 1);
    }
    return Gadget{"diagonal_uk(" + std::to_string(k) + ")", std::move(c), {{0}, ancilla_wires, {0}}, spec, ancilla,
                  gates::dyadic_phase(k)};
}

Gadget hadamard_gadget_a() {
    Circuit c(2, 1);
    c.gate("S", {0}).gate("S", {1}).gate("CNOT", {0, 1}).gate("Sdg", {1});
    c.gate("CNOT", {1, 0}).gate("CNOT", {0, 1});
    c.gate("H", {1}).measure(1, 0);
    c.classically_controlled(named_gate("X", {0}), 0, 1);
    return Gadget{"hadamard_gadget_a", std::move(c), {{0}, {1}, {0}}, "+", named_state("+"), gates::H()};
}

Gadget hadamard_gadget_b() {
    Circuit c(2, 1);
    c.gate("CZ", {0, 1}).gate("H", {1}).measure(1, 0);
    c.classically_controlled(named_gate("X", {0}), 0, 1);
    return Gadget{"hadamard_gadget_b", std::move(c), {{1}, {0}, {0}}, "+", named_state("+"), gates::H()};
}

namespace {

// Pauli index (a, b) with C ∝ X^a Z^b, if any.
std::optional<std::pair<int, int>> pauli_index(const ComplexMatrix &c) {
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            ComplexMatrix p = ComplexMatrix::identity(2);
            if (b) {
                p = p * gates::Z();
            }
            if (a) {
                p = gates::X() * p;
            }
            if (equal_up_to_phase(p, c, 1e-9)) {
                return std::pair{a, b};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Gadget teleport_gate(const ComplexMatrix &u, const std::string &label) {
    if (u.rows() != 2 || !is_unitary(u, 1e-9)) {
        throw UnknownGadget("teleport_gate: needs a single-qubit unitary");
    }
    Circuit c(3, 2);
    c.gate("CNOT", {0, 1}).gate("H", {0}).measure(0, 0).measure(1, 1);

    const PureState ancilla(kron(ComplexMatrix::identity(2), u) * named_state("phi+").amplitudes());

    // Branch m leaves W_m ψ on wire 2 with W_m unitary, so C_m = U W_m† restores U.
    std::vector<ComplexMatrix> corrections;
    std::vector<std::size_t> outcomes;
    for (const auto &b : branch_operators(c)) {
        const std::size_t m = static_cast<std::size_t>(b.cbits[0] * 2 + b.cbits[1]);
        ComplexMatrix w(2, 2);
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t o = 0; o < 2; ++o) {
                Complex s = 0;
                for (std::size_t e = 0; e < 4; ++e) {
                    s += b.op((m << 1) | o, (x << 2) | e) * ancilla[e];
                }
                // Each outcome has probability 1/4.
                w(o, x) = 2.0 * s;
            }
        }
        corrections.push_back(u * w.adjoint());
        outcomes.push_back(m);
    }

    // Try C_m ∝ X^{a(m)} Z^{b(m)} with a, b affine over GF(2) in the bits (m0, m1).
    std::vector<std::pair<int, int>> pauli(4);
    bool affine = outcomes.size() == 4;
    for (std::size_t k = 0; k < corrections.size() && affine; ++k) {
        auto p = pauli_index(corrections[k]);
        if (!p) {
            affine = false;
        } else {
            pauli[outcomes[k]] = *p;
        }
    }
    auto affine_coeffs = [&](int which) -> std::optional<std::array<int, 3>> {
        auto val = [&](std::size_t m) { return which == 0 ? pauli[m].first : pauli[m].second; };
        const int c0 = val(0);
        const int c1 = val(2) ^ c0;  // bit m0 is the high bit of m
        const int c2 = val(1) ^ c0;
        if ((c0 ^ c1 ^ c2) != val(3)) {
            return std::nullopt;
        }
        return std::array<int, 3>{c0, c1, c2};
    };
    std::optional<std::array<int, 3>> ax;
    std::optional<std::array<int, 3>> az;
    if (affine) {
        ax = affine_coeffs(0);
        az = affine_coeffs(1);
    }
    if (ax && az) {
        // C = X^a Z^b: Z first, then X.
        for (const auto &[coeffs, name] : {std::pair{*az, "Z"}, std::pair{*ax, "X"}}) {
            if (coeffs[0]) {
                c.gate(name, {2});
            }
            for (std::size_t bit = 0; bit < 2; ++bit) {
                if (coeffs[1 + bit]) {
                    c.classically_controlled(named_gate(name, {2}), bit, 1);
                }
            }
        }
    } else {
        for (std::size_t k = 0; k < corrections.size(); ++k) {
            if (equal_up_to_phase(corrections[k], ComplexMatrix::identity(2), 1e-9)) {
                continue;
            }
            c.controlled(Gate{"U2", corrections[k], {2}}, {0, 1}, {outcomes[k]});
        }
    }
    return Gadget{"teleport_gate(" + label + ")", std::move(c), {{0}, {1, 2}, {2}}, "(1*" + label + ")phi+", ancilla, u};
}

Gadget gadget_library(const std::string &name) {
    if (name == "z_gadget") {
        return z_gadget();
    }
    if (name == "s_gadget") {
        return s_gadget();
    }
    if (name == "t_msi") {
        return t_msi();
    }
    if (name == "hadamard_gadget_a") {
        return hadamard_gadget_a();
    }
    if (name == "hadamard_gadget_b") {
        return hadamard_gadget_b();
    }
    static const std::regex uk(R"(diagonal_uk\((\d{1,2})\))");
    static const std::regex tele(R"(teleport_gate\((\w+)\))");
    std::smatch m;
    if (std::regex_match(name, m, uk)) {
        return diagonal_uk(std::stoul(m[1].str()));
    }
    if (std::regex_match(name, m, tele)) {
        auto u = gates::by_name(m[1].str());
        if (!u || u->rows() != 2) {
            throw UnknownGadget("teleport_gate: '" + m[1].str() + "' is not a single-qubit gate name");
        }
        return teleport_gate(*u, m[1].str());
    }
    throw UnknownGadget("unknown gadget '" + name + "'");
}

QuantumChannel gadget_channel(const Gadget &g) {
    return circuit_channel(g.circuit, g.wires, DensityMatrix::pure(g.ancilla));
}

GadgetCheck verify_gadget(const Gadget &g, double tol, std::size_t random_inputs, std::uint64_t seed) {
    const QuantumChannel ch = gadget_channel(g);
    const QuantumChannel ideal = unitary_channel(g.target);
    GadgetCheck out;
    out.choi_distance = choi_distance(ch, ideal);
    out.branches = branch_operators(g.circuit).size();
    for (std::size_t t = 0; t < random_inputs; ++t) {
        Rng rng(derive_seed(seed, t));
        const PureState psi = haar_state(ch.in_dim(), rng);
        out.max_state_distance = std::max(out.max_state_distance, pure_input_distance(ch, g.target, psi));
    }
    out.passed = out.choi_distance <= tol && out.max_state_distance <= std::max(tol, 1e-8);
    return out;
}

}  // namespace coh
