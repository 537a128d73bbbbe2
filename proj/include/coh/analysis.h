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

#ifndef COH_ANALYSIS_H
#define COH_ANALYSIS_H

#include <cstddef>
#include <string>
#include <vector>

#include "coh/circuit.h"

namespace coh {

enum class OpClass { Incoherent, Hadamard, ControlledHadamard, Measurement, Unclassifiable };

std::string to_string(OpClass c);

/// Incoherent gates (and any control structure around them) are Incoherent; H up to phase is
/// Hadamard; a controlled or classically controlled H, or a 2-qubit literal equal to one, is
/// ControlledHadamard.
OpClass classify_op(const CircuitOp &op, double tol = 1e-9);

/// Number of Hadamard and controlled-Hadamard ops. Throws UnclassifiableGate naming every
/// offending op index if any op is neither incoherent nor a (controlled-)Hadamard.
std::size_t hadamard_count(const Circuit &c, double tol = 1e-9);

/// One-line description of an op in circuit-file syntax.
std::string describe_op(const CircuitOp &op);

}  // namespace coh

#endif
