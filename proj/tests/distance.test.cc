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

#include "coh/distance.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "coh/channel.h"
#include "coh/coherence.h"
#include "coh/errors.h"
#include "coh/gates.h"
#include "coh/rng.h"
#include "test_util.test.h"

using namespace coh;
using namespace coh::testing;

namespace {

/// max over a θ×φ grid of √(1 − |⟨ψ|U†V|ψ⟩|²).
double unitary_grid_oracle(const ComplexMatrix &u, const ComplexMatrix &v, int steps) {
    const ComplexMatrix w = u.adjoint() * v;
    double best = 0;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j < 2 * steps; ++j) {
            const PureState psi = bloch_state(std::numbers::pi * i / steps, std::numbers::pi * j / steps);
            const ComplexVector wpsi = w * psi.amplitudes();
            const double ov = std::abs(inner(psi.amplitudes(), wpsi));
            best = std::max(best, std::sqrt(std::max(0.0, 1 - ov * ov)));
        }
    }
    return best;
}

}  // namespace

TEST(distance, trace_distance_examples) {
    Rng rng(103);
    const DensityMatrix rho = wishart_state(4, rng);
    ASSERT_NEAR(trace_distance(rho, rho), 0, 1e-15);
    ASSERT_NEAR(trace_distance(DensityMatrix::pure(named_state("0")), DensityMatrix::pure(named_state("1"))), 1, 1e-15);
    ASSERT_NEAR(
        trace_distance(DensityMatrix::pure(named_state("0")), DensityMatrix::pure(named_state("+"))),
        std::numbers::sqrt2 / 2, 1e-15);
}

TEST(distance, pure_state_formula) {
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        const PureState a = haar_state(4, rng);
        const PureState b = haar_state(4, rng);
        const double ov = std::abs(inner(a.amplitudes(), b.amplitudes()));
        ASSERT_NEAR(
            trace_distance(DensityMatrix::pure(a), DensityMatrix::pure(b)), std::sqrt(1 - ov * ov), 1e-12);
    }
}

TEST(distance, trace_distance_shape_mismatch) {
    ASSERT_THROW(trace_distance(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(4)), ShapeError);
}

TEST(distance, identity_vs_identity) {
    const InducedDistance d = induced_distance_lower(identity_channel(2), gates::I(), 0);
    ASSERT_NEAR(d.value, 0, 1e-12);
}

TEST(distance, identity_vs_hadamard) {
    const InducedDistance d = induced_distance_lower(identity_channel(2), gates::H(), 0);
    ASSERT_NEAR(d.value, 1.0, 1e-6);
    const ComplexVector hpsi = gates::H() * d.witness.amplitudes();
    ASSERT_LT(std::abs(inner(d.witness.amplitudes(), hpsi)), 2e-3);
}

TEST(distance, replace_with_maximally_mixed_matches_bound) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t d = std::size_t{1} << n;
        const QuantumChannel ch = replace_channel(d, DensityMatrix::maximally_mixed(d));
        const double expected = 1 - 1.0 / static_cast<double>(d);
        ASSERT_NEAR(induced_distance_lower(ch, gates::hadamard_power(n), 1).value, expected, 1e-9);
        const NogoBound b = certified_nogo_bound(ch, n, DensityMatrix::trusted(ComplexMatrix::identity(1)));
        ASSERT_NEAR(b.bound, expected, 1e-12);
    }
}

TEST(distance, unitary_pairs_match_grid_oracle) {
    Rng rng(109);
    for (int t = 0; t < 10; ++t) {
        const ComplexMatrix u = haar_unitary(2, rng);
        const ComplexMatrix v = haar_unitary(2, rng);
        const InducedDistance d = induced_distance_lower(unitary_channel(u), v, static_cast<std::uint64_t>(t));
        const double oracle = unitary_grid_oracle(u, v, 200);
        ASSERT_NEAR(d.value, oracle, 1e-3);
        ASSERT_GE(d.value, oracle - 1e-9);
    }
}

TEST(distance, lower_bound_is_attained_by_witness) {
    Rng rng(113);
    const QuantumChannel ch = channel_from_realization(haar_unitary(8, rng), wishart_state(4, rng), TraceSpec::qubits(3, {1, 2}));
    const InducedDistance d = induced_distance_lower(ch, gates::H(), 5);
    ASSERT_NEAR(pure_input_distance(ch, gates::H(), d.witness), d.value, 1e-12);
    ASSERT_GT(d.evaluations, 0u);
}

TEST(distance, deterministic_for_fixed_seed) {
    Rng rng(127);
    const QuantumChannel ch = channel_from_realization(haar_unitary(4, rng), wishart_state(2, rng), TraceSpec::qubits(2, {1}));
    const InducedDistance a = induced_distance_lower(ch, gates::H(), 42);
    const InducedDistance b = induced_distance_lower(ch, gates::H(), 42);
    ASSERT_EQ(a.value, b.value);
    ASSERT_EQ(a.start_index, b.start_index);
}

TEST(distance, budget_limits_evaluations) {
    InducedDistanceOptions opt;
    opt.budget = 50;
    const InducedDistance d = induced_distance_lower(identity_channel(4), gates::hadamard_power(2), 0, opt);
    ASSERT_LE(d.evaluations, 50u);
}

TEST(distance, certified_bound_for_fixed_output) {
    // E(ρ) = |00⟩⟨00|: the bound is 1 − ⟨x|σ|x⟩ maximized over x, i.e. 1 for any x ≠ 00.
    const QuantumChannel ch = replace_channel(4, DensityMatrix::pure(PureState::basis(4, 0)));
    const NogoBound b = certified_nogo_bound(ch, 2, DensityMatrix::trusted(ComplexMatrix::identity(1)));
    ASSERT_NEAR(b.bound, 1.0, 1e-15);
    ASSERT_NE(b.witness_basis_index, 0u);
    ASSERT_NEAR(pure_input_distance(ch, gates::hadamard_power(2), b.witness_state), 1.0, 1e-12);
}

TEST(distance, certified_bound_half_for_dephased_incoherent) {
    Rng rng(131);
    for (int t = 0; t < 20; ++t) {
        const auto perm = random_permutation(4, rng);
        ComplexMatrix u(4, 4);
        for (std::size_t x = 0; x < 4; ++x) {
            u(perm[x], x) = std::polar(1.0, uniform_real(-3, 3, rng));
        }
        const QuantumChannel free = channel_from_realization(u, DensityMatrix::trusted(ComplexMatrix::identity(1)), TraceSpec::qubits(2, {1}));
        const NogoBound b = certified_nogo_bound(compose(dephasing_channel(2), free), 1, wishart_state(2, rng));
        ASSERT_GE(b.bound, 0.5 - 1e-12);
    }
}

TEST(distance, certified_bound_rejects_coherent_channels) {
    ASSERT_THROW(
        certified_nogo_bound(unitary_channel(gates::H()), 1, DensityMatrix::trusted(ComplexMatrix::identity(1))),
        NotDephasingCovariant);
}

TEST(distance, bitstring) {
    ASSERT_EQ(bitstring(5, 4), "0101");
    ASSERT_EQ(bitstring(0, 1), "0");
}
