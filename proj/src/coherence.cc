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

#include "coh/coherence.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coh/errors.h"

namespace coh {

ComplexMatrix IncoherentDecomposition::matrix() const {
    const std::size_t d = permutation.size();
    ComplexMatrix m(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        m(permutation[x], x) = std::polar(1.0, phases[x]);
    }
    return m;
}

ComplexMatrix dephase(const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        out(k, k) = m(k, k);
    }
    return out;
}

DensityMatrix dephase(const DensityMatrix &rho) {
    return DensityMatrix::trusted(dephase(rho.matrix()));
}

bool is_incoherent_state(const DensityMatrix &rho, double tol) {
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (r != c && std::abs(rho(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::optional<IncoherentDecomposition> classify_incoherent_unitary(const ComplexMatrix &u, double tol) {
    if (!is_unitary(u, tol)) {
        throw NotUnitary("classify_incoherent_unitary: matrix is not unitary");
    }
    const std::size_t d = u.rows();
    IncoherentDecomposition out;
    out.permutation.resize(d);
    out.phases.resize(d);
    std::vector<bool> hit(d, false);
    for (std::size_t x = 0; x < d; ++x) {
        std::optional<std::size_t> big;
        for (std::size_t r = 0; r < d; ++r) {
            const double mag = std::abs(u(r, x));
            if (mag >= 1 - tol) {
                if (big) {
                    return std::nullopt;
                }
                big = r;
            } else if (mag > tol) {
                return std::nullopt;
            }
        }
        if (!big || hit[*big]) {
            return std::nullopt;
        }
        hit[*big] = true;
        out.permutation[x] = *big;
        double theta = std::arg(u(*big, x));
        if (theta <= -std::numbers::pi) {
            theta = std::numbers::pi;
        }
        out.phases[x] = theta;
    }
    return out;
}

CoherenceRank coherence_rank(std::span<const Complex> amplitudes, double tol) {
    CoherenceRank r;
    r.tolerance_used = tol;
    for (const auto &a : amplitudes) {
        const double mag = std::abs(a);
        if (mag > tol) {
            ++r.value;
        }
        if (mag > tol / 10 && mag < tol * 10) {
            r.near_threshold = true;
        }
    }
    return r;
}

CoherenceRank coherence_rank(const PureState &psi, double tol) {
    return coherence_rank(psi.amplitudes(), tol);
}

namespace {

double off_diagonal_max(const ComplexMatrix &m) {
    double worst = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) {
                worst = std::max(worst, std::abs(m(r, c)));
            }
        }
    }
    return worst;
}

double diagonal_max(const ComplexMatrix &m) {
    double worst = 0;
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        worst = std::max(worst, std::abs(m(k, k)));
    }
    return worst;
}

}  // namespace

// Δ(|i⟩⟨j|) is |i⟩⟨i| when i == j and zero otherwise, which reduces both tests to
// statements about the images of matrix units.
double dephasing_commutator(const KrausMap &ch) {
    double worst = 0;
    for (std::size_t i = 0; i < ch.in_dim(); ++i) {
        for (std::size_t j = 0; j < ch.in_dim(); ++j) {
            const ComplexMatrix img = ch.apply_unit(i, j);
            worst = std::max(worst, i == j ? off_diagonal_max(img) : diagonal_max(img));
        }
    }
    return worst;
}

double mio_defect(const KrausMap &ch) {
    double worst = 0;
    for (std::size_t i = 0; i < ch.in_dim(); ++i) {
        worst = std::max(worst, off_diagonal_max(ch.apply_unit(i, i)));
    }
    return worst;
}

bool is_dephasing_covariant(const KrausMap &ch, double tol) {
    return dephasing_commutator(ch) <= tol;
}

bool is_mio(const KrausMap &ch, double tol) {
    return mio_defect(ch) <= tol;
}

}  // namespace coh
