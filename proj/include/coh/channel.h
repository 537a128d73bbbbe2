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

#ifndef COH_CHANNEL_H
#define COH_CHANNEL_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coh/matrix.h"
#include "coh/states.h"
#include "coh/tolerances.h"

namespace coh {

/// Tensor structure of the joint (system ⊗ ancilla) register after a unitary, and which factors are discarded.
/// Subsystem 0 is the most significant factor.
struct TraceSpec {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> traced;

    /// `total` qubits, tracing the listed wires.
    static TraceSpec qubits(std::size_t total, std::vector<std::size_t> traced_wires);

    std::size_t total_dim() const;
    std::size_t kept_dim() const;
};

/// Stinespring-style description ρ ↦ Tr_X[(1 ⊗ |x⟩⟨x|) U (ρ ⊗ τ) U†].
struct Realization {
    ComplexMatrix unitary;
    DensityMatrix ancilla;
    TraceSpec trace;
    /// Subsystems projected onto `outcome` before tracing; empty for a channel.
    std::vector<std::size_t> measured;
    std::vector<std::size_t> outcome;
};

/// Completely positive map in Kraus form: ρ ↦ Σ K ρ K†.
class KrausMap {
   public:
    KrausMap() = default;
    KrausMap(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus);

    std::size_t in_dim() const {
        return in_dim_;
    }
    std::size_t out_dim() const {
        return out_dim_;
    }
    const std::vector<ComplexMatrix> &kraus() const {
        return kraus_;
    }
    const std::optional<Realization> &realization() const {
        return realization_;
    }
    void set_realization(Realization r) {
        realization_ = std::move(r);
    }

    /// Linear extension to an arbitrary in_dim × in_dim operator.
    ComplexMatrix apply(const ComplexMatrix &op) const;
    /// Image of the matrix unit |i⟩⟨j|.
    ComplexMatrix apply_unit(std::size_t i, std::size_t j) const;
    /// Σ K†K.
    ComplexMatrix kraus_gram() const;

   protected:
    std::size_t in_dim_ = 0;
    std::size_t out_dim_ = 0;
    std::vector<ComplexMatrix> kraus_;
    std::optional<Realization> realization_;
};

/// Trace-preserving KrausMap: Σ K†K = I within tolerances.channel (ShapeError otherwise).
class QuantumChannel : public KrausMap {
   public:
    QuantumChannel() = default;
    QuantumChannel(
        std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus,
        const Tolerances &tol = default_tolerances());
};

/// Trace non-increasing KrausMap for one measurement outcome.
class SubChannel : public KrausMap {
   public:
    SubChannel() = default;
    SubChannel(
        std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus, std::string outcome_label,
        const Tolerances &tol = default_tolerances());

    const std::string &outcome_label() const {
        return outcome_label_;
    }

   private:
    std::string outcome_label_;
};

/// Normalized Choi state (I ⊗ E)(|Ω⟩⟨Ω|), |Ω⟩ = Σ_i |ii⟩/√d_in. Input factor first; trace 1.
struct ChoiMatrix {
    ComplexMatrix matrix;
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
};

QuantumChannel channel_from_realization(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace,
    const Tolerances &tol = default_tolerances());

/// `measured` lists subsystems of `trace.dims` and `outcome` their basis indices.
SubChannel subchannel_from_realization(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace,
    std::vector<std::size_t> measured, std::vector<std::size_t> outcome,
    const Tolerances &tol = default_tolerances());

/// Every outcome of measuring `measured`, in lexicographic order.
std::vector<SubChannel> all_subchannels(
    const ComplexMatrix &u, const DensityMatrix &ancilla, const TraceSpec &trace,
    const std::vector<std::size_t> &measured, const Tolerances &tol = default_tolerances());

DensityMatrix apply(const KrausMap &ch, const DensityMatrix &rho);
/// E(|ψ⟩⟨ψ|) computed from the vectors K|ψ⟩.
DensityMatrix apply(const KrausMap &ch, const PureState &psi);
/// Evaluates the stored realization directly: Tr_X[(1 ⊗ |x⟩⟨x|) U (ρ ⊗ τ) U†].
/// Throws std::logic_error when the map has no realization.
ComplexMatrix apply_via_realization(const KrausMap &ch, const ComplexMatrix &rho);

ChoiMatrix choi(const KrausMap &ch);

/// V with E(ρ) = VρV† when the Choi state has an eigenvalue ≥ 1 − tol; global phase fixed so the
/// largest-magnitude entry is real positive. Empty for non-unitary channels or in_dim ≠ out_dim.
std::optional<ComplexMatrix> as_unitary(const KrausMap &ch, double tol = 1e-9);

/// ½‖J_a − J_b‖₁ between normalized Choi states. Throws ShapeError on dimension mismatch.
double choi_distance(const KrausMap &a, const KrausMap &b);

/// Max deviation of a(|i⟩⟨j|) − b(|i⟩⟨j|) over all matrix units.
double superoperator_deviation(const KrausMap &a, const KrausMap &b);

/// If Tr E(ρ) = p for every ρ (Σ K†K = p·I within tol), returns p.
std::optional<double> constant_acceptance(const KrausMap &sub, double tol = 1e-9);

/// E / p as a channel. Throws ShapeError if the acceptance probability is not constant or is zero.
QuantumChannel normalized(const SubChannel &sub, const Tolerances &tol = default_tolerances());

QuantumChannel unitary_channel(const ComplexMatrix &u);
QuantumChannel identity_channel(std::size_t dim);
/// Δ on dimension dim.
QuantumChannel dephasing_channel(std::size_t dim);
/// ρ ↦ Tr(ρ)·σ.
QuantumChannel replace_channel(std::size_t in_dim, const DensityMatrix &sigma);
/// second ∘ first.
QuantumChannel compose(const QuantumChannel &second, const QuantumChannel &first);
/// ρ ↦ E(ρ ⊗ τ) for a map whose input is system ⊗ ancilla with the ancilla last.
QuantumChannel fix_ancilla(const QuantumChannel &ch, const DensityMatrix &tau);
SubChannel fix_ancilla(const SubChannel &sub, const DensityMatrix &tau);
/// Drops Kraus operators with Frobenius norm below `drop`.
std::vector<ComplexMatrix> prune_kraus(std::vector<ComplexMatrix> kraus, double drop);

}  // namespace coh

#endif
