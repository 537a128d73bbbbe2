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

#ifndef COH_RNG_H
#define COH_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "coh/matrix.h"
#include "coh/states.h"

namespace coh {

/// One splitmix64 step.
std::uint64_t splitmix64(std::uint64_t x);
/// Deterministic child seed for (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

using Rng = std::mt19937_64;

/// Standard complex Gaussian with E|z|² = 1.
Complex complex_gaussian(Rng &rng);
/// Haar-distributed unitary from the QR factor of a Ginibre matrix.
ComplexMatrix haar_unitary(std::size_t dim, Rng &rng);
PureState haar_state(std::size_t dim, Rng &rng);
/// GG†/Tr(GG†) for a square Ginibre G; full rank with probability one.
DensityMatrix wishart_state(std::size_t dim, Rng &rng);
/// Random state with exactly `support` nonzero amplitudes at uniformly chosen positions.
PureState sparse_state(std::size_t dim, std::size_t support, Rng &rng);
/// Uniform random permutation of {0, …, n−1}.
std::vector<std::size_t> random_permutation(std::size_t n, Rng &rng);
/// Uniform index in [0, n).
std::size_t uniform_index(std::size_t n, Rng &rng);
double uniform_real(double lo, double hi, Rng &rng);

}  // namespace coh

#endif
