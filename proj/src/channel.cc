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

#include "coh/channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coh/eig.h"
#include "coh/errors.h"

namespace coh {

TraceSpec TraceSpec::qubits(std::size_t total, std::vector<std::size_t> traced_wires) {
    return TraceSpec{qubit_dims(total), std::move(traced_wires)};
}

std::size_t TraceSpec::total_dim() const {
    std::size_t d = 1;
    for (auto k : dims) {
        d *= k;
    }
    return d;
}

std::size_t TraceSpec::kept_dim() const {
    std::size_t d = total_dim();
    for (auto t : traced) {
        d /= dims.at(t);
    }
    return d;
}

KrausMap::KrausMap(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
    for (const auto &k : kraus_) {
        if (k.rows() != out_dim_ || k.cols() != in_dim_) {
            throw ShapeError(
                "KrausMap: operator is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) + ", expected " +
                std::to_string(out_dim_) + "x" + std::to_string(in_dim_));
        }
    }
}

ComplexMatrix KrausMap::apply(const ComplexMatrix &op) const {
    if (op.rows() != in_dim_ || op.cols() != in_dim_) {
        throw ShapeError("apply: operator dimension does not match channel input");
    }
    ComplexMatrix out(out_dim_, out_dim_);
    for (const auto &k : kraus_) {
        out += k * op * k.adjoint();
    }
    return out;
}

ComplexMatrix KrausMap::apply_unit(std::size_t i, std::size_t j) const {
    ComplexMatrix out(out_dim_, out_dim_);
    for (const auto &k : kraus_) {
        for (std::size_t a = 0; a < out_dim_; ++a) {
            const Complex x = k(a, i);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t b = 0; b < out_dim_; ++b) {
                out(a, b) += x * std::conj(k(b, j));
            }
        }
    }
    return out;
}

ComplexMatrix KrausMap::kraus_gram() const {
    ComplexMatrix g(in_dim_, in_dim_);
    for (const auto &k : kraus_) {
        g += k.adjoint() * k;
    }
    return g;
}

QuantumChannel::QuantumChannel(
    std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus, const Tolerances &tol)
    : KrausMap(in_dim, out_dim, std::move(kraus)) {
    const double dev = max_abs_diff(kraus_gram(), ComplexMatrix::identity(in_dim));
    if (dev > tol.channel) {
        throw ShapeError("QuantumChannel: not trace preserving (‖ΣK†K − I‖ = " + std::to_string(dev) + ")");
    }
}

SubChannel::SubChannel(
    std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus, std::string outcome_label,
    const Tolerances &tol)
    : KrausMap(in_dim, out_dim, std::move(kraus)), outcome_label_(std::move(outcome_label)) {
    const ComplexMatrix slack = ComplexMatrix::identity(in_dim) - kraus_gram();
    const auto ev = hermitian_eigenvalues(slack, 1e-9);
    if (!ev.empty() && ev.front() < -tol.channel) {
        throw ShapeError("SubChannel: trace increasing (min eigenvalue of I − ΣK†K is " + std::to_string(ev.front()) + ")");
    }
}

std::vector<ComplexMatrix> prune_kraus(std::vector<ComplexMatrix> kraus, double drop) {
    std::erase_if(kraus, [drop](const ComplexMatrix &k) { return k.frobenius_norm() < drop; });
    return kraus;
}

namespace {

// Where each row of the joint register lands after projection and partial trace.
struct RowMap {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
    std::vector<bool> selected;
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
};

RowMap make_row_map(
    const TraceSpec &trace, const std::vector<std::size_t> &measured, const std::vector<std::size_t> &outcome) {
    const std::size_t n = trace.dims.size();
    std::vector<bool> is_traced(n, false);
    for (auto t : trace.traced) {
        if (t >= n) {
            throw ShapeError("realization: traced subsystem out of range");
        }
        is_traced[t] = true;
    }
    std::vector<long> want(n, -1);
    if (measured.size() != outcome.size()) {
        throw ShapeError("realization: outcome length does not match measured subsystems");
    }
    for (std::size_t k = 0; k < measured.size(); ++k) {
        if (measured[k] >= n || outcome[k] >= trace.dims[measured[k]]) {
            throw ShapeError("realization: measured subsystem or outcome out of range");
        }
        want[measured[k]] = static_cast<long>(outcome[k]);
    }
    RowMap m;
    for (std::size_t k = 0; k < n; ++k) {
        (is_traced[k] ? m.traced_dim : m.kept_dim) *= trace.dims[k];
    }
    const std::size_t total = trace.total_dim();
    m.kept.resize(total);
    m.traced.resize(total);
    m.selected.resize(total);
    std::vector<std::size_t> digits(n);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t rem = r;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rem % trace.dims[k];
            rem /= trace.dims[k];
        }
        std::size_t kept = 0;
        std::size_t traced = 0;
        bool ok = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (want[k] >= 0 && digits[k] != static_cast<std::size_t>(want[k])) {
                ok = false;
            }
            if (is_traced[k]) {
                traced = traced * trace.dims[k] + digits[k];
            } else {
                kept = kept * trace.dims[k] + digits[k];
            }
        }
        m.kept[r] = kept;
        m.traced[r] = traced;
        m.selected[r] = ok;
    }
    return m;
}

struct RealizationKraus {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<ComplexMatrix> kraus;
};

RealizationKraus realization_kraus(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace,
    const std::vector<std::size_t> &measured, const std::vector<std::size_t> &outcome, const Tolerances &tol) {
    if (!u.is_square()) {
        throw ShapeError("realization: unitary is not square");
    }
    const std::size_t total = u.rows();
    if (trace.total_dim() != total) {
        throw ShapeError("realization: trace spec dims do not multiply to the unitary dimension");
    }
    const std::size_t da = ancilla.dim();
    if (da == 0 || total % da != 0) {
        throw ShapeError("realization: ancilla dimension does not divide the unitary dimension");
    }
    if (!is_unitary(u, tol.unitary)) {
        throw NotUnitary("realization: matrix is not unitary");
    }
    const std::size_t in_dim = total / da;
    const RowMap rows = make_row_map(trace, measured, outcome);
    const HermitianEig spectrum = hermitian_eig(ancilla.matrix(), tol.hermitian);

    RealizationKraus out;
    out.in_dim = in_dim;
    out.out_dim = rows.kept_dim;
    for (std::size_t j = 0; j < da; ++j) {
        const double lambda = spectrum.eigenvalues[j];
        if (lambda <= tol.kraus_drop * tol.kraus_drop) {
            continue;
        }
        const double weight = std::sqrt(lambda);
        // U (I ⊗ |e_j⟩): total × in_dim.
        ComplexMatrix m(total, in_dim);
        for (std::size_t r = 0; r < total; ++r) {
            if (!rows.selected[r]) {
                continue;
            }
            for (std::size_t x = 0; x < in_dim; ++x) {
                Complex s = 0;
                for (std::size_t e = 0; e < da; ++e) {
                    s += u(r, x * da + e) * spectrum.eigenvectors(e, j);
                }
                m(r, x) = weight * s;
            }
        }
        std::vector<ComplexMatrix> block(rows.traced_dim, ComplexMatrix(rows.kept_dim, in_dim));
        for (std::size_t r = 0; r < total; ++r) {
            if (!rows.selected[r]) {
                continue;
            }
            for (std::size_t x = 0; x < in_dim; ++x) {
                block[rows.traced[r]](rows.kept[r], x) = m(r, x);
            }
        }
        for (auto &k : block) {
            out.kraus.push_back(std::move(k));
        }
    }
    out.kraus = prune_kraus(std::move(out.kraus), tol.kraus_drop);
    return out;
}

std::string outcome_label(const std::vector<std::size_t> &outcome) {
    std::string s;
    for (auto d : outcome) {
        s += std::to_string(d);
    }
    return s;
}

}  // namespace

QuantumChannel channel_from_realization(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace, const Tolerances &tol) {
    auto rk = realization_kraus(u, ancilla, trace, {}, {}, tol);
    QuantumChannel ch(rk.in_dim, rk.out_dim, std::move(rk.kraus), tol);
    ch.set_realization(Realization{u, ancilla, trace, {}, {}});
    return ch;
}

SubChannel subchannel_from_realization(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace, std::vector<std::size_t> measured,
    std::vector<std::size_t> outcome, const Tolerances &tol) {
    auto rk = realization_kraus(u, ancilla, trace, measured, outcome, tol);
    SubChannel sub(rk.in_dim, rk.out_dim, std::move(rk.kraus), outcome_label(outcome), tol);
    sub.set_realization(Realization{u, ancilla, trace, std::move(measured), std::move(outcome)});
    return sub;
}

std::vector<SubChannel> all_subchannels(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace,
    const std::vector<std::size_t> &measured, const Tolerances &tol) {
    std::size_t count = 1;
    for (auto m : measured) {
        count *= trace.dims.at(m);
    }
    std::vector<SubChannel> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<std::size_t> outcome(measured.size());
        std::size_t rem = idx;
        for (std::size_t k = measured.size(); k-- > 0;) {
            outcome[k] = rem % trace.dims[measured[k]];
            rem /= trace.dims[measured[k]];
        }
        out.push_back(subchannel_from_realization(u, ancilla, trace, measured, std::move(outcome), tol));
    }
    return out;
}

DensityMatrix apply(const KrausMap &ch, const DensityMatrix &rho) {
    return DensityMatrix::trusted(ch.apply(rho.matrix()));
}

DensityMatrix apply(const KrausMap &ch, const PureState &psi) {
    if (psi.dim() != ch.in_dim()) {
        throw ShapeError("apply: state dimension does not match channel input");
    }
    ComplexMatrix out(ch.out_dim(), ch.out_dim());
    for (const auto &k : ch.kraus()) {
        const ComplexVector v = k * psi.amplitudes();
        for (std::size_t a = 0; a < v.size(); ++a) {
            if (v[a] == Complex{}) {
                continue;
            }
            for (std::size_t b = 0; b < v.size(); ++b) {
                out(a, b) += v[a] * std::conj(v[b]);
            }
        }
    }
    return DensityMatrix::trusted(std::move(out));
}

ComplexMatrix apply_via_realization(const KrausMap &ch, const ComplexMatrix &rho) {
    if (!ch.realization()) {
        throw std::logic_error("apply_via_realization: map has no realization");
    }
    const Realization &r = *ch.realization();
    const ComplexMatrix joint = r.unitary * kron(rho, r.ancilla.matrix()) * r.unitary.adjoint();
    const RowMap rows = make_row_map(r.trace, r.measured, r.outcome);
    ComplexMatrix projected = joint;
    for (std::size_t a = 0; a < joint.rows(); ++a) {
        for (std::size_t b = 0; b < joint.cols(); ++b) {
            if (!rows.selected[a] || !rows.selected[b]) {
                projected(a, b) = 0;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < r.trace.dims.size(); ++k) {
        if (std::find(r.trace.traced.begin(), r.trace.traced.end(), k) == r.trace.traced.end()) {
            keep.push_back(k);
        }
    }
    return partial_trace(projected, r.trace.dims, keep);
}

ChoiMatrix choi(const KrausMap &ch) {
    const std::size_t din = ch.in_dim();
    const std::size_t dout = ch.out_dim();
    const std::size_t d = din * dout;
    ComplexMatrix j(d, d);
    const double scale = 1.0 / static_cast<double>(din);
    ComplexVector v(d);
    for (const auto &k : ch.kraus()) {
        for (std::size_t i = 0; i < din; ++i) {
            for (std::size_t a = 0; a < dout; ++a) {
                v[i * dout + a] = k(a, i);
            }
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (v[r] == Complex{}) {
                continue;
            }
            const Complex x = v[r] * scale;
            for (std::size_t c = 0; c < d; ++c) {
                j(r, c) += x * std::conj(v[c]);
            }
        }
    }
    return ChoiMatrix{std::move(j), din, dout};
}

std::optional<ComplexMatrix> as_unitary(const KrausMap &ch, double tol) {
    if (ch.in_dim() != ch.out_dim() || ch.in_dim() == 0) {
        return std::nullopt;
    }
    const std::size_t d = ch.in_dim();
    const ChoiMatrix c = choi(ch);
    const HermitianEig eig = hermitian_eig(c.matrix, 1e-9);
    const double top = eig.eigenvalues.back();
    if (top < 1.0 - tol) {
        return std::nullopt;
    }
    ComplexMatrix v(d, d);
    const double s = std::sqrt(static_cast<double>(d));
    const std::size_t last = d * d - 1;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            v(r, i) = s * eig.eigenvectors(i * d + r, last);
        }
    }
    // Canonical global phase: largest-magnitude entry (first in row-major order on ties) real positive.
    std::size_t best = 0;
    double best_mag = -1;
    const auto e = v.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        const double mag = std::abs(e[k]);
        if (mag > best_mag + 1e-12) {
            best_mag = mag;
            best = k;
        }
    }
    v *= std::conj(e[best]) / std::abs(e[best]);
    if (!is_unitary(v, std::max(1e-9, 10.0 * tol * static_cast<double>(d)))) {
        return std::nullopt;
    }
    return v;
}

double choi_distance(const KrausMap &a, const KrausMap &b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) {
        throw ShapeError("choi_distance: channel dimensions differ");
    }
    return 0.5 * trace_norm(choi(a).matrix - choi(b).matrix);
}

double superoperator_deviation(const KrausMap &a, const KrausMap &b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) {
        throw ShapeError("superoperator_deviation: channel dimensions differ");
    }
    double dev = 0;
    for (std::size_t i = 0; i < a.in_dim(); ++i) {
        for (std::size_t j = 0; j < a.in_dim(); ++j) {
            dev = std::max(dev, max_abs_diff(a.apply_unit(i, j), b.apply_unit(i, j)));
        }
    }
    return dev;
}

std::optional<double> constant_acceptance(const KrausMap &sub, double tol) {
    const ComplexMatrix g = sub.kraus_gram();
    const double p = g.trace().real() / static_cast<double>(sub.in_dim());
    if (max_abs_diff(g, ComplexMatrix::identity(sub.in_dim()) * Complex(p)) > tol) {
        return std::nullopt;
    }
    return p;
}

QuantumChannel normalized(const SubChannel &sub, const Tolerances &tol) {
    const auto p = constant_acceptance(sub, tol.channel);
    if (!p || *p <= tol.branch_prune) {
        throw ShapeError("normalized: acceptance probability is not a positive constant");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(sub.kraus().size());
    const double scale = 1.0 / std::sqrt(*p);
    for (const auto &k : sub.kraus()) {
        kraus.push_back(k * Complex(scale));
    }
    return QuantumChannel(sub.in_dim(), sub.out_dim(), std::move(kraus), tol);
}

QuantumChannel unitary_channel(const ComplexMatrix &u) {
    if (!is_unitary(u, 1e-9)) {
        throw NotUnitary("unitary_channel: matrix is not unitary");
    }
    return QuantumChannel(u.rows(), u.rows(), {u});
}

QuantumChannel identity_channel(std::size_t dim) {
    return QuantumChannel(dim, dim, {ComplexMatrix::identity(dim)});
}

QuantumChannel dephasing_channel(std::size_t dim) {
    std::vector<ComplexMatrix> kraus;
    for (std::size_t x = 0; x < dim; ++x) {
        kraus.push_back(ComplexMatrix::unit(dim, x, x));
    }
    return QuantumChannel(dim, dim, std::move(kraus));
}

QuantumChannel replace_channel(std::size_t in_dim, const DensityMatrix &sigma) {
    // K_{j,i} = √λ_j |e_j⟩⟨i|.
    const HermitianEig eig = hermitian_eig(sigma.matrix());
    std::vector<ComplexMatrix> kraus;
    const std::size_t dout = sigma.dim();
    for (std::size_t j = 0; j < dout; ++j) {
        const double lambda = eig.eigenvalues[j];
        if (lambda <= 1e-24) {
            continue;
        }
        for (std::size_t i = 0; i < in_dim; ++i) {
            ComplexMatrix k(dout, in_dim);
            for (std::size_t a = 0; a < dout; ++a) {
                k(a, i) = std::sqrt(lambda) * eig.eigenvectors(a, j);
            }
            kraus.push_back(std::move(k));
        }
    }
    return QuantumChannel(in_dim, dout, std::move(kraus));
}

QuantumChannel compose(const QuantumChannel &second, const QuantumChannel &first) {
    if (second.in_dim() != first.out_dim()) {
        throw ShapeError("compose: dimension mismatch");
    }
    std::vector<ComplexMatrix> kraus;
    for (const auto &b : second.kraus()) {
        for (const auto &a : first.kraus()) {
            kraus.push_back(b * a);
        }
    }
    return QuantumChannel(first.in_dim(), second.out_dim(), prune_kraus(std::move(kraus), 1e-12));
}

namespace {

std::vector<ComplexMatrix> fixed_ancilla_kraus(const KrausMap &ch, const DensityMatrix &tau) {
    const std::size_t da = tau.dim();
    if (da == 0 || ch.in_dim() % da != 0) {
        throw ShapeError("fix_ancilla: ancilla dimension does not divide the channel input");
    }
    const std::size_t ds = ch.in_dim() / da;
    const HermitianEig eig = hermitian_eig(tau.matrix());
    std::vector<ComplexMatrix> out;
    for (std::size_t j = 0; j < da; ++j) {
        const double lambda = eig.eigenvalues[j];
        if (lambda <= 1e-24) {
            continue;
        }
        // I ⊗ √λ_j|e_j⟩ as an (ds·da) × ds isometry piece.
        ComplexMatrix embed(ch.in_dim(), ds);
        for (std::size_t x = 0; x < ds; ++x) {
            for (std::size_t e = 0; e < da; ++e) {
                embed(x * da + e, x) = std::sqrt(lambda) * eig.eigenvectors(e, j);
            }
        }
        for (const auto &k : ch.kraus()) {
            out.push_back(k * embed);
        }
    }
    return prune_kraus(std::move(out), 1e-12);
}

}  // namespace

QuantumChannel fix_ancilla(const QuantumChannel &ch, const DensityMatrix &tau) {
    return QuantumChannel(ch.in_dim() / tau.dim(), ch.out_dim(), fixed_ancilla_kraus(ch, tau));
}

SubChannel fix_ancilla(const SubChannel &sub, const DensityMatrix &tau) {
    return SubChannel(sub.in_dim() / tau.dim(), sub.out_dim(), fixed_ancilla_kraus(sub, tau), sub.outcome_label());
}

}  // namespace coh
