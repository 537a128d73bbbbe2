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

#include "coh/matrix.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "coh/eig.h"
#include "coh/errors.h"
#include "coh/gates.h"
#include "coh/rng.h"
#include "coh/states.h"
#include "test_util.test.h"

using namespace coh;
using namespace coh::testing;

TEST(matrix, kron_identity) {
    ASSERT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(matrix, kron_basis_projectors) {
    const ComplexMatrix p0 = PureState::basis(2, 0).projector();
    const ComplexMatrix p1 = PureState::basis(2, 1).projector();
    ASSERT_EQ(kron(p0, p1), PureState::basis(4, 1).projector());
}

TEST(matrix, kron_hadamards_on_zero) {
    const ComplexMatrix hh = kron(gates::H(), gates::H());
    const ComplexVector zero{1, 0, 0, 0};
    const ComplexVector v = hh * std::span<const Complex>(zero);
    for (const auto &z : v) {
        ASSERT_NEAR(z.real(), 0.5, 1e-15);
        ASSERT_NEAR(z.imag(), 0.0, 1e-15);
    }
}

TEST(matrix, kron_matches_index_oracle) {
    Rng rng(11);
    for (std::size_t r = 1; r <= 3; ++r) {
        const auto a = gaussian_matrix(r, r + 1, rng);
        const auto b = gaussian_matrix(2, 3, rng);
        ASSERT_LT(max_abs_diff(kron(a, b), kron_oracle(a, b)), 1e-14);
    }
}

TEST(matrix, kron_vectors) {
    const ComplexVector a{1, 2};
    const ComplexVector b{3, Complex(0, 1)};
    const ComplexVector expected{3, Complex(0, 1), 6, Complex(0, 2)};
    ASSERT_EQ(kron(std::span<const Complex>(a), std::span<const Complex>(b)), expected);
}

TEST(matrix, mixed_product_property) {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto a = gaussian_matrix(2, 2, rng);
        const auto b = gaussian_matrix(3, 3, rng);
        const auto c = gaussian_matrix(2, 2, rng);
        const auto d = gaussian_matrix(3, 3, rng);
        ASSERT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    }
}

TEST(matrix, adjoint_and_trace) {
    const ComplexMatrix m{{1, Complex(0, 2)}, {3, Complex(4, -1)}};
    const ComplexMatrix expected{{1, 3}, {Complex(0, -2), Complex(4, 1)}};
    ASSERT_EQ(m.adjoint(), expected);
    ASSERT_EQ(m.trace(), Complex(5, -1));
}

TEST(matrix, shape_mismatch_throws) {
    ComplexMatrix a(2, 2);
    ComplexMatrix b(3, 3);
    ASSERT_THROW(a * b, ShapeError);
    ASSERT_THROW(a += b, ShapeError);
    ASSERT_THROW(ComplexMatrix(2, 2, ComplexVector(3)), ShapeError);
}

TEST(matrix, non_finite_entries_rejected) {
    ASSERT_THROW(ComplexMatrix(1, 1, ComplexVector{Complex(NAN, 0)}), ShapeError);
}

TEST(matrix, is_unitary) {
    ASSERT_TRUE(is_unitary(gates::H(), 1e-12));
    ASSERT_FALSE(is_unitary(ComplexMatrix{{1, 0}, {0, 0}}, 1e-9));
    ASSERT_FALSE(is_unitary(ComplexMatrix(2, 3), 1e-9));

    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        ComplexMatrix u = ComplexMatrix::identity(8);
        for (int g = 0; g < 12; ++g) {
            const std::size_t q = uniform_index(3, rng);
            ComplexMatrix layer;
            switch (uniform_index(3, rng)) {
                case 0:
                    layer = q == 0 ? kron(gates::H(), ComplexMatrix::identity(4))
                                   : q == 1 ? kron(kron(gates::I(), gates::H()), gates::I())
                                            : kron(ComplexMatrix::identity(4), gates::H());
                    break;
                case 1:
                    layer = q == 0 ? kron(gates::S(), ComplexMatrix::identity(4))
                                   : kron(ComplexMatrix::identity(4), gates::S());
                    break;
                default:
                    layer = q == 2 ? kron(gates::I(), gates::CNOT()) : kron(gates::CNOT(), gates::I());
            }
            u = layer * u;
        }
        ASSERT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(8)), 1e-12);
        ASSERT_TRUE(is_unitary(u, 1e-9));
    }
}

TEST(matrix, equal_up_to_phase) {
    ASSERT_TRUE(equal_up_to_phase(gates::H(), Complex(0, 1) * gates::H(), 1e-9));
    ASSERT_FALSE(equal_up_to_phase(gates::S(), gates::T(), 1e-9));
    ASSERT_FALSE(equal_up_to_phase(gates::X(), gates::Z(), 1e-9));
}

TEST(eig, trace_norm_examples) {
    ASSERT_NEAR(trace_norm(ComplexMatrix(3, 3)), 0.0, 1e-15);
    ASSERT_NEAR(trace_norm(ComplexMatrix{{1, 0}, {0, -1}}), 2.0, 1e-15);
    const ComplexMatrix diff = PureState::basis(2, 0).projector() - named_state("+").projector();
    ASSERT_NEAR(trace_norm(diff), std::numbers::sqrt2, 1e-14);
}

TEST(eig, trace_norm_matches_closed_form_2x2) {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto h = hermitian_part(gaussian_matrix(2, 2, rng));
        ASSERT_NEAR(trace_norm(h), trace_norm_2x2(h), 1e-12);
    }
}

TEST(eig, decomposition_reconstructs) {
    Rng rng(19);
    for (std::size_t d : {1, 2, 5, 16}) {
        const auto h = hermitian_part(gaussian_matrix(d, d, rng));
        const HermitianEig e = hermitian_eig(h);
        ComplexMatrix rebuilt(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const ComplexVector v = e.eigenvectors.col(k);
            rebuilt += e.eigenvalues[k] * ComplexMatrix::outer(v, v);
        }
        ASSERT_LT(max_abs_diff(rebuilt, h), 1e-10) << "d=" << d;
        ASSERT_LT(max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, ComplexMatrix::identity(d)), 1e-10);
        for (std::size_t k = 1; k < d; ++k) {
            ASSERT_LE(e.eigenvalues[k - 1], e.eigenvalues[k] + 1e-12);
        }
    }
}

TEST(eig, rejects_non_hermitian) {
    ASSERT_THROW(hermitian_eig(ComplexMatrix{{0, 1}, {0, 0}}), NotHermitian);
}

TEST(states, pure_state_validation) {
    ASSERT_THROW(PureState({1, 1}), ShapeError);
    ASSERT_NO_THROW(PureState({1, 0}));
    const PureState p = PureState::normalized({3, Complex(0, 4)});
    ASSERT_NEAR(std::abs(p[0]), 0.6, 1e-15);
    ASSERT_NEAR(std::abs(p[1]), 0.8, 1e-15);
}

TEST(states, density_matrix_validation) {
    ASSERT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), NotHermitian);
    ASSERT_THROW(DensityMatrix(ComplexMatrix{{0.6, 0}, {0, 0.6}}), ShapeError);
    ASSERT_THROW(DensityMatrix(ComplexMatrix{{1.5, 0}, {0, -0.5}}), ShapeError);
    ASSERT_NO_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(states, partial_trace_product) {
    const auto dims = qubit_dims(2);
    const std::vector<std::size_t> keep0{0};
    const DensityMatrix r = partial_trace(DensityMatrix::pure(PureState::basis(4, 0)), dims, keep0);
    ASSERT_EQ(r.matrix(), PureState::basis(2, 0).projector());
}

TEST(states, partial_trace_bell_is_maximally_mixed) {
    const auto dims = qubit_dims(2);
    const std::vector<std::size_t> keep0{0};
    const PureState phi = named_state("phi+");
    ASSERT_LT(max_abs_diff(partial_trace(phi, dims, keep0).matrix(), DensityMatrix::maximally_mixed(2).matrix()), 1e-15);
    ASSERT_LT(
        max_abs_diff(
            partial_trace(DensityMatrix::pure(phi), dims, keep0).matrix(), DensityMatrix::maximally_mixed(2).matrix()),
        1e-15);
}

TEST(states, partial_trace_matches_index_oracle) {
    Rng rng(23);
    const std::vector<std::size_t> dims{2, 4};
    const std::vector<std::size_t> keep_first{0};
    const std::vector<std::size_t> keep_second{1};
    for (int t = 0; t < 10; ++t) {
        const DensityMatrix rho = wishart_state(2, rng);
        const DensityMatrix tau = wishart_state(4, rng);
        const DensityMatrix joint = tensor(rho, tau);
        ASSERT_LT(max_abs_diff(partial_trace(joint, dims, keep_second).matrix(), tau.matrix()), 1e-14);
        const auto m = gaussian_matrix(8, 8, rng);
        ASSERT_LT(max_abs_diff(partial_trace(m, dims, keep_first), trace_second_oracle(m, 2, 4)), 1e-13);
        ASSERT_LT(max_abs_diff(partial_trace(m, dims, keep_second), trace_first_oracle(m, 2, 4)), 1e-13);
    }
}

TEST(states, partial_trace_pure_matches_density_path) {
    Rng rng(29);
    const auto dims = qubit_dims(3);
    const std::vector<std::size_t> keep{0, 2};
    for (int t = 0; t < 10; ++t) {
        const PureState psi = haar_state(8, rng);
        ASSERT_LT(
            max_abs_diff(
                partial_trace(psi, dims, keep).matrix(), partial_trace(DensityMatrix::pure(psi), dims, keep).matrix()),
            1e-14);
    }
}

TEST(states, named_states) {
    ASSERT_EQ(named_state("0").dim(), 2u);
    ASSERT_NEAR(std::abs(named_state("T")[1] - std::polar(std::numbers::sqrt2 / 2, std::numbers::pi / 4)), 0, 1e-15);
    ASSERT_NEAR(std::abs(named_state("-i")[1] - Complex(0, -std::numbers::sqrt2 / 2)), 0, 1e-15);
    ASSERT_EQ(state_from_spec("").dim(), 1u);
    ASSERT_EQ(state_from_spec("-*+i*phi+").dim(), 16u);
    ASSERT_THROW(named_state("bogus"), std::invalid_argument);
    ASSERT_THROW(state_from_spec("0**1"), std::invalid_argument);
}

TEST(states, dimension_limit) {
    ASSERT_THROW(plus_state(13), DimensionLimit);
}

TEST(matrix, kron_dimension_limit) {
    ASSERT_THROW(kron(ComplexMatrix::identity(64), ComplexMatrix::identity(128)), DimensionLimit);
    ASSERT_NO_THROW(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)));
}
