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

#ifndef COH_HARNESS_H
#define COH_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coh/matrix.h"
#include "coh/report.h"
#include "coh/rng.h"
#include "coh/states.h"

namespace coh {

struct HarnessConfig {
    std::size_t n = 1;
    std::size_t k = 0;
    /// Upper end of the ancilla-qubit cycle; trial t uses a value determined by t.
    std::size_t ancilla_qubits = 1;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    /// Objective evaluations for each recorded induced-distance lower bound; 0 skips them.
    std::size_t distance_budget = 1200;
};

/// A unitary on n system qubits followed by a ancilla qubits, built only from incoherent pieces,
/// with an ancilla state τ.
struct IncoherentRealization {
    std::string generator;
    std::size_t n = 0;
    std::size_t a = 0;
    ComplexMatrix unitary;
    DensityMatrix tau;
    std::string ancilla;
};

/// Generator cycles with `variant`: dense permutation×phase, compiled incoherent circuit,
/// product U_sys ⊗ U_anc, and diagonal-gate injection (the last two need a ≥ 1 and fall back to
/// the dense generator otherwise).
IncoherentRealization random_incoherent_realization(std::size_t n, std::size_t a, std::size_t variant, Rng &rng);

/// Exact no-go campaign; also records every dephasing-commutation check.
NoGoReport verify_exact_nogo(const HarnessConfig &cfg);
/// Approximate bound campaign (n ≤ 4).
NoGoReport verify_approx_bound(const HarnessConfig &cfg);
/// Product-unitary marginal campaign with an entangling negative control.
NoGoReport verify_ancilla_independence(const HarnessConfig &cfg);
/// Rank contradiction for k < n ≤ 4, plus the no-ancilla overlap witness.
NoGoReport verify_kton(const HarnessConfig &cfg);
/// Rank window for alternating products on up to cfg.n qubits with up to cfg.k Hadamard layers.
NoGoReport verify_rank_ladder(const HarnessConfig &cfg);

/// Campaign ids accepted by run_campaign: exact, approx, ancilla-indep, kton, rank-ladder.
std::vector<std::string> campaign_ids();
/// Dispatches by id. Throws std::invalid_argument for an unknown id or violated precondition.
NoGoReport run_campaign(const std::string &id, const HarnessConfig &cfg);

}  // namespace coh

#endif
