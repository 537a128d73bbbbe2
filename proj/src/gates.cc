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

#include "coh/gates.h"

#include <cmath>
#include <numbers>
#include <set>

#include "coh/errors.h"

namespace coh::gates {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;
const Complex kI{0, 1};
}  // namespace

ComplexMatrix I() {
    return ComplexMatrix::identity(2);
}
ComplexMatrix X() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix Y() {
    return {{0, -kI}, {kI, 0}};
}
ComplexMatrix Z() {
    return {{1, 0}, {0, -1}};
}
ComplexMatrix H() {
    return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}
ComplexMatrix S() {
    return {{1, 0}, {0, kI}};
}
ComplexMatrix Sdg() {
    return {{1, 0}, {0, -kI}};
}
ComplexMatrix T() {
    return phase(std::numbers::pi / 4);
}
ComplexMatrix Tdg() {
    return phase(-std::numbers::pi / 4);
}
ComplexMatrix CNOT() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}
ComplexMatrix CZ() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
}
ComplexMatrix SWAP() {
    return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}
ComplexMatrix TOFFOLI() {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(6, 6) = 0;
    m(7, 7) = 0;
    m(6, 7) = 1;
    m(7, 6) = 1;
    return m;
}

ComplexMatrix phase(double theta) {
    return {{1, 0}, {0, std::polar(1.0, theta)}};
}

ComplexMatrix dyadic_phase(std::size_t k) {
    return phase(2 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k)));
}

ComplexMatrix hadamard_power(std::size_t n) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t k = 0; k < n; ++k) {
        out = kron(out, H());
    }
    return out;
}

std::optional<ComplexMatrix> by_name(std::string_view name) {
    if (name == "I") return I();
    if (name == "X") return X();
    if (name == "Y") return Y();
    if (name == "Z") return Z();
    if (name == "H") return H();
    if (name == "S") return S();
    if (name == "Sdg") return Sdg();
    if (name == "T") return T();
    if (name == "Tdg") return Tdg();
    if (name == "CNOT") return CNOT();
    if (name == "CZ") return CZ();
    if (name == "SWAP") return SWAP();
    if (name == "TOFFOLI") return TOFFOLI();
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"I", "X", "Y", "Z", "H", "S", "Sdg", "T", "Tdg", "CNOT", "CZ", "SWAP", "TOFFOLI"};
}

ComplexMatrix controlled_unitary(const ComplexMatrix &u, std::size_t controls, std::span<const std::size_t> triggers) {
    if (!is_unitary(u, 1e-9)) {
        throw NotUnitary("controlled_unitary: target matrix is not unitary");
    }
    if (triggers.empty()) {
        throw InvalidTriggerSet("controlled_unitary: trigger set is empty");
    }
    const std::size_t patterns = std::size_t{1} << controls;
    const std::set<std::size_t> trig(triggers.begin(), triggers.end());
    if (*trig.rbegin() >= patterns) {
        throw InvalidTriggerSet("controlled_unitary: trigger bitstring wider than the control register");
    }
    const std::size_t d = u.rows();
    const std::size_t total = patterns * d;
    if (total > 4096) {
        throw DimensionLimit("controlled_unitary: result exceeds the dimension limit");
    }
    ComplexMatrix out(total, total);
    for (std::size_t x = 0; x < patterns; ++x) {
        const bool fire = trig.contains(x);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                out(x * d + r, x * d + c) = fire ? u(r, c) : (r == c ? Complex{1} : Complex{});
            }
        }
    }
    return out;
}

}  // namespace coh::gates
