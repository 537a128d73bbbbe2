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

#include "coh/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "coh/eig.h"
#include "coh/errors.h"

namespace coh {

PureState::PureState(ComplexVector amplitudes, const Tolerances &tol) : amplitudes_(std::move(amplitudes)) {
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ShapeError("PureState: non-finite amplitude");
        }
    }
    const double n = norm(amplitudes_);
    if (std::abs(n * n - 1.0) > tol.norm) {
        throw ShapeError("PureState: squared norm " + std::to_string(n * n) + " is not 1");
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    const double n = norm(amplitudes);
    if (!(n > 0) || !std::isfinite(n)) {
        throw ShapeError("PureState::normalized: zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ShapeError("PureState::basis: index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return PureState(std::move(v));
}

ComplexMatrix PureState::projector() const {
    return ComplexMatrix::outer(amplitudes_, amplitudes_);
}

PureState tensor(const PureState &a, const PureState &b) {
    return PureState(kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) {
        throw ShapeError("DensityMatrix: non-square matrix");
    }
    if (!is_hermitian(matrix_, tol.hermitian)) {
        throw NotHermitian("DensityMatrix: matrix is not Hermitian");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw ShapeError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
    }
    const auto ev = hermitian_eigenvalues(matrix_, tol.hermitian);
    if (!ev.empty() && ev.front() < -tol.psd) {
        throw ShapeError("DensityMatrix: negative eigenvalue " + std::to_string(ev.front()));
    }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix) {
    DensityMatrix out;
    out.matrix_ = std::move(matrix);
    return out;
}

DensityMatrix DensityMatrix::pure(const PureState &psi) {
    return trusted(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return trusted(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::incoherent(std::span<const double> probabilities) {
    ComplexMatrix m(probabilities.size(), probabilities.size());
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        m(k, k) = probabilities[k];
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix::trusted(kron(a.matrix(), b.matrix()));
}

namespace {

struct Layout {
    std::vector<std::size_t> strides;  // stride of each subsystem in the full index
    std::vector<std::size_t> kept;     // ascending kept subsystems
    std::vector<std::size_t> traced;   // ascending traced subsystems
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
};

Layout make_layout(std::size_t total, std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
    Layout l;
    std::size_t prod = 1;
    for (auto d : dims) {
        prod *= d;
    }
    if (prod != total) {
        throw ShapeError(
            "partial_trace: subsystem dims multiply to " + std::to_string(prod) + ", state has dim " +
            std::to_string(total));
    }
    std::vector<bool> is_kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) {
            throw ShapeError("partial_trace: kept subsystem index out of range");
        }
        is_kept[k] = true;
    }
    l.strides.assign(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        l.strides[k - 1] = l.strides[k] * dims[k];
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (is_kept[k]) {
            l.kept.push_back(k);
            l.kept_dim *= dims[k];
        } else {
            l.traced.push_back(k);
            l.traced_dim *= dims[k];
        }
    }
    return l;
}

// Full index of (kept multi-index a, traced multi-index t).
std::vector<std::size_t> offsets(
    const Layout &l, std::span<const std::size_t> dims, const std::vector<std::size_t> &which, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rem = idx;
        std::size_t full = 0;
        for (std::size_t k = which.size(); k-- > 0;) {
            const std::size_t sub = which[k];
            full += (rem % dims[sub]) * l.strides[sub];
            rem /= dims[sub];
        }
        out[idx] = full;
    }
    return out;
}

}  // namespace

ComplexMatrix partial_trace(
    const ComplexMatrix &m, std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
    if (!m.is_square()) {
        throw ShapeError("partial_trace: non-square operator");
    }
    const Layout l = make_layout(m.rows(), dims, keep);
    const auto kept_off = offsets(l, dims, l.kept, l.kept_dim);
    const auto traced_off = offsets(l, dims, l.traced, l.traced_dim);
    ComplexMatrix out(l.kept_dim, l.kept_dim);
    for (std::size_t a = 0; a < l.kept_dim; ++a) {
        for (std::size_t b = 0; b < l.kept_dim; ++b) {
            Complex s = 0;
            for (auto t : traced_off) {
                s += m(kept_off[a] + t, kept_off[b] + t);
            }
            out(a, b) = s;
        }
    }
    return out;
}

DensityMatrix partial_trace(
    const DensityMatrix &rho, std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
    return DensityMatrix::trusted(partial_trace(rho.matrix(), dims, keep));
}

DensityMatrix partial_trace(
    const PureState &psi, std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
    const Layout l = make_layout(psi.dim(), dims, keep);
    const auto kept_off = offsets(l, dims, l.kept, l.kept_dim);
    const auto traced_off = offsets(l, dims, l.traced, l.traced_dim);
    ComplexMatrix out(l.kept_dim, l.kept_dim);
    for (auto t : traced_off) {
        for (std::size_t a = 0; a < l.kept_dim; ++a) {
            const Complex x = psi[kept_off[a] + t];
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t b = 0; b < l.kept_dim; ++b) {
                out(a, b) += x * std::conj(psi[kept_off[b] + t]);
            }
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

std::vector<std::size_t> qubit_dims(std::size_t n) {
    return std::vector<std::size_t>(n, 2);
}

PureState named_state(std::string_view name) {
    const double h = std::numbers::sqrt2 / 2;
    const Complex i{0, 1};
    if (name == "0") {
        return PureState({1, 0});
    }
    if (name == "1") {
        return PureState({0, 1});
    }
    if (name == "+") {
        return PureState({h, h});
    }
    if (name == "-") {
        return PureState({h, -h});
    }
    if (name == "+i") {
        return PureState({h, h * i});
    }
    if (name == "-i") {
        return PureState({h, -h * i});
    }
    if (name == "T") {
        return PureState({h, h * std::polar(1.0, std::numbers::pi / 4)});
    }
    if (name == "phi+") {
        return PureState({h, 0, 0, h});
    }
    throw std::invalid_argument("unknown state name '" + std::string(name) + "'");
}

PureState state_from_spec(std::string_view spec) {
    PureState out({Complex{1}});
    std::size_t start = 0;
    if (spec.empty()) {
        return out;
    }
    while (true) {
        const std::size_t star = spec.find('*', start);
        const auto part = spec.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
        out = tensor(out, named_state(part));
        if (star == std::string_view::npos) {
            break;
        }
        start = star + 1;
    }
    return out;
}

PureState plus_state(std::size_t n) {
    if (n > 12) {
        throw DimensionLimit("plus_state: more than 12 qubits");
    }
    const std::size_t d = std::size_t{1} << n;
    return PureState(ComplexVector(d, Complex(1.0 / std::sqrt(static_cast<double>(d)))));
}

}  // namespace coh
