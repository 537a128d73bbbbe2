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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "coh/coherence.h"
#include "coh/eig.h"
#include "coh/errors.h"
#include "coh/gates.h"
#include "coh/rng.h"

namespace coh {

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("trace_distance: dimension mismatch");
    }
    return 0.5 * trace_norm(a - b);
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return trace_distance(a.matrix(), b.matrix());
}

double pure_input_distance(const KrausMap &ch, const ComplexMatrix &target, const PureState &psi) {
    const ComplexMatrix out = apply(ch, psi).matrix();
    const ComplexVector v = target * psi.amplitudes();
    ComplexMatrix diff = out;
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = 0; b < v.size(); ++b) {
            diff(a, b) -= v[a] * std::conj(v[b]);
        }
    }
    double s = 0;
    for (double e : hermitian_eigenvalues(diff, 1e-8)) {
        s += std::abs(e);
    }
    return 0.5 * s;
}

namespace {

bool is_power_of_two(std::size_t d) {
    return d != 0 && (d & (d - 1)) == 0;
}

std::vector<PureState> conjugate_basis(std::size_t d) {
    std::vector<PureState> out;
    if (is_power_of_two(d)) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < d) {
            ++n;
        }
        const ComplexMatrix h = gates::hadamard_power(n);
        for (std::size_t k = 0; k < d; ++k) {
            out.push_back(PureState::normalized(h.col(k)));
        }
        return out;
    }
    for (std::size_t k = 0; k < d; ++k) {
        ComplexVector v(d);
        for (std::size_t x = 0; x < d; ++x) {
            v[x] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k * x) / static_cast<double>(d));
        }
        out.push_back(PureState::normalized(std::move(v)));
    }
    return out;
}

struct Ascent {
    double value;
    ComplexVector point;
    std::size_t evaluations;
};

Ascent coordinate_ascent(
    const KrausMap &ch, const ComplexMatrix &target, const PureState &start, std::size_t budget,
    const InducedDistanceOptions &opt) {
    const std::size_t d = start.dim();
    std::vector<double> x(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
        x[2 * k] = start[k].real();
        x[2 * k + 1] = start[k].imag();
    }
    auto to_state = [d](const std::vector<double> &p) {
        ComplexVector v(d);
        for (std::size_t k = 0; k < d; ++k) {
            v[k] = {p[2 * k], p[2 * k + 1]};
        }
        return v;
    };
    std::size_t evals = 0;
    auto eval = [&](const std::vector<double> &p) {
        ++evals;
        const ComplexVector v = to_state(p);
        if (!(norm(v) > 1e-12)) {
            return -1.0;
        }
        return pure_input_distance(ch, target, PureState::normalized(v));
    };
    double best = eval(x);
    double step = opt.initial_step;
    while (step >= opt.min_step && evals < budget) {
        const double pass_start = best;
        for (std::size_t c = 0; c < x.size() && evals < budget; ++c) {
            for (double dir : {1.0, -1.0}) {
                std::vector<double> trial = x;
                trial[c] += dir * step;
                const double n = std::sqrt(std::accumulate(
                    trial.begin(), trial.end(), 0.0, [](double acc, double t) { return acc + t * t; }));
                if (!(n > 1e-12)) {
                    continue;
                }
                for (auto &t : trial) {
                    t /= n;
                }
                const double val = eval(trial);
                if (val > best) {
                    best = val;
                    x = std::move(trial);
                    break;
                }
                if (evals >= budget) {
                    break;
                }
            }
        }
        if (best - pass_start < opt.min_improvement) {
            step *= 0.5;
        }
    }
    return Ascent{best, to_state(x), evals};
}

}  // namespace

InducedDistance induced_distance_lower(
    const KrausMap &ch, const ComplexMatrix &target, std::uint64_t seed, const InducedDistanceOptions &options) {
    const std::size_t d = ch.in_dim();
    if (ch.out_dim() != d || target.rows() != d || target.cols() != d) {
        throw ShapeError("induced_distance_lower: channel and target dimensions differ");
    }
    std::vector<PureState> starts;
    for (std::size_t k = 0; k < d; ++k) {
        starts.push_back(PureState::basis(d, k));
    }
    for (auto &s : conjugate_basis(d)) {
        starts.push_back(std::move(s));
    }
    const std::size_t fixed = starts.size();
    for (std::size_t r = 0; r < options.random_starts; ++r) {
        Rng rng(derive_seed(seed, fixed + r));
        starts.push_back(haar_state(d, rng));
    }
    const std::size_t per_start = std::max<std::size_t>(1, options.budget / starts.size());

    InducedDistance best;
    best.value = -1;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const Ascent a = coordinate_ascent(ch, target, starts[i], per_start, options);
        best.evaluations += a.evaluations;
        if (a.value > best.value) {
            best.value = a.value;
            best.witness = PureState::normalized(a.point);
            best.start_index = i;
        }
    }
    return best;
}

NogoBound certified_nogo_bound(const KrausMap &ch, std::size_t n, const DensityMatrix &ancilla, double tol) {
    const std::size_t ds = std::size_t{1} << n;
    if (ch.out_dim() != ds || ch.in_dim() != ds * ancilla.dim()) {
        throw ShapeError("certified_nogo_bound: channel must map n qubits ⊗ ancilla to n qubits");
    }
    if (!is_dephasing_covariant(ch, tol)) {
        throw NotDephasingCovariant("certified_nogo_bound: channel does not commute with the dephasing map");
    }
    const ComplexMatrix input =
        kron(ComplexMatrix::identity(ds) * Complex(1.0 / static_cast<double>(ds)), dephase(ancilla.matrix()));
    const ComplexMatrix sigma = ch.apply(input);
    NogoBound out;
    out.sigma_diagonal.resize(ds);
    std::size_t arg = 0;
    for (std::size_t x = 0; x < ds; ++x) {
        out.sigma_diagonal[x] = sigma(x, x).real();
        if (out.sigma_diagonal[x] < out.sigma_diagonal[arg] - 1e-12) {
            arg = x;
        }
    }
    out.bound = 1.0 - out.sigma_diagonal[arg];
    out.witness_basis_index = arg;
    out.witness_state = PureState::normalized(gates::hadamard_power(n).col(arg));
    return out;
}

std::string bitstring(std::size_t value, std::size_t bits) {
    std::string s(bits, '0');
    for (std::size_t k = 0; k < bits; ++k) {
        if ((value >> (bits - 1 - k)) & 1U) {
            s[k] = '1';
        }
    }
    return s;
}

}  // namespace coh
