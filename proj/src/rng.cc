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

#include "coh/rng.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "coh/errors.h"

namespace coh {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Box-Muller on raw 53-bit uniforms; std::normal_distribution is implementation-defined.
namespace {
double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

double uniform_real(double lo, double hi, Rng &rng) {
    return lo + (hi - lo) * uniform01(rng);
}

std::size_t uniform_index(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw ShapeError("uniform_index: empty range");
    }
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = Rng::max() - Rng::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

Complex complex_gaussian(Rng &rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-std::log(u1));
    const double t = 2 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

ComplexMatrix haar_unitary(std::size_t dim, Rng &rng) {
    ComplexMatrix g(dim, dim);
    for (auto &z : g.mutable_entries()) {
        z = complex_gaussian(rng);
    }
    // Modified Gram-Schmidt gives the QR factor whose R has a positive real diagonal,
    // which is the Haar-distributed choice.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            Complex dot = 0;
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(g(r, p)) * g(r, c);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                g(r, c) -= dot * g(r, p);
            }
        }
        double nrm = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            nrm += std::norm(g(r, c));
        }
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < dim; ++r) {
            g(r, c) /= nrm;
        }
    }
    return g;
}

PureState haar_state(std::size_t dim, Rng &rng) {
    ComplexVector v(dim);
    for (auto &z : v) {
        z = complex_gaussian(rng);
    }
    return PureState::normalized(std::move(v));
}

DensityMatrix wishart_state(std::size_t dim, Rng &rng) {
    ComplexMatrix g(dim, dim);
    for (auto &z : g.mutable_entries()) {
        z = complex_gaussian(rng);
    }
    ComplexMatrix w = g * g.adjoint();
    // Symmetrize away rounding so the Hermitian check is exact.
    w = (w + w.adjoint()) * Complex(0.5);
    w *= Complex(1.0 / w.trace().real());
    return DensityMatrix(std::move(w));
}

PureState sparse_state(std::size_t dim, std::size_t support, Rng &rng) {
    if (support == 0 || support > dim) {
        throw ShapeError("sparse_state: support must lie in [1, dim]");
    }
    std::vector<std::size_t> idx = random_permutation(dim, rng);
    ComplexVector v(dim);
    for (std::size_t k = 0; k < support; ++k) {
        // Bounded away from zero so the support is unambiguous at any rank tolerance.
        const double mag = uniform_real(0.2, 1.0, rng);
        v[idx[k]] = std::polar(mag, uniform_real(-std::numbers::pi, std::numbers::pi, rng));
    }
    return PureState::normalized(std::move(v));
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng &rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t k = n; k > 1; --k) {
        std::swap(p[k - 1], p[uniform_index(k, rng)]);
    }
    return p;
}

}  // namespace coh
