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

#ifndef COH_CLI_H
#define COH_CLI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace coh {

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::size_t> ancilla_qubits;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string out_path;
    /// "json" or "csv".
    std::string format = "json";
};

/// Gate table, Hadamard count k and the rank window for the all-zeros input.
int cmd_analyze(const std::string &circuit_path, std::ostream &out, std::ostream &err);

/// `name` is a gadget name; "diagonal_uk" takes its level from `k`. `ancilla` replaces the
/// gadget's resource state with a product of named states.
int cmd_verify_gadget(
    const std::string &name, std::optional<std::size_t> k, const std::optional<std::string> &ancilla,
    std::ostream &out, std::ostream &err);

/// Runs a campaign, writes the report to cfg.out_path (if set) and prints a summary.
int cmd_nogo(const std::string &campaign, const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Induced-distance lower bound of the channel described by a JSON spec against "hadamard:n",
/// plus the certified bound when the realization commutes with Δ.
int cmd_distance(
    const std::string &spec_path, const std::string &target, const RunConfig &cfg, std::ostream &out,
    std::ostream &err);

}  // namespace coh

#endif
