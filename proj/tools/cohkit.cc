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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coh/cli.h"

int main(int argc, char **argv) {
    CLI::App app{"cohkit: coherence resource checks for small circuits and channels"};
    app.require_subcommand(1);

    std::string circuit_path;
    auto *analyze = app.add_subcommand("analyze", "Gate table, Hadamard count and rank window of a circuit file");
    analyze->add_option("circuit", circuit_path, "circuit file")->required();

    std::string gadget;
    std::optional<std::size_t> gadget_k;
    std::optional<std::string> gadget_ancilla;
    auto *verify = app.add_subcommand("verify-gadget", "Check a gadget against its target gate");
    verify->add_option("name", gadget, "gadget name")->required();
    verify->add_option("--k", gadget_k, "level for diagonal_uk");
    verify->add_option("--ancilla", gadget_ancilla, "replacement ancilla, e.g. 0 or -*+i");

    coh::RunConfig cfg;
    std::string campaign;
    auto *nogo = app.add_subcommand("nogo", "Run a verification campaign");
    nogo->add_option("campaign", campaign, "exact | approx | ancilla-indep | kton | rank-ladder")->required();

    std::string spec_path;
    std::string target;
    auto *distance = app.add_subcommand("distance", "Induced trace distance of a channel spec to H^n");
    distance->add_option("spec", spec_path, "channel spec JSON")->required();
    distance->add_option("--target", target, "hadamard:<n>")->required();

    for (auto *sub : {nogo, distance}) {
        sub->add_option("--seed", cfg.seed, "seed")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "tolerance override");
        sub->add_option("--out", cfg.out_path, "report path");
    }
    nogo->add_option("--n", cfg.n, "system qubits");
    nogo->add_option("--k", cfg.k, "Hadamard budget");
    nogo->add_option("--ancilla-qubits", cfg.ancilla_qubits, "ancilla qubits");
    nogo->add_option("--trials", cfg.trials, "trials")->capture_default_str();
    nogo->add_option("--format", cfg.format, "json | csv")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : coh::kExitUsage;
    }
    if (analyze->parsed()) {
        return coh::cmd_analyze(circuit_path, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return coh::cmd_verify_gadget(gadget, gadget_k, gadget_ancilla, std::cout, std::cerr);
    }
    if (nogo->parsed()) {
        return coh::cmd_nogo(campaign, cfg, std::cout, std::cerr);
    }
    return coh::cmd_distance(spec_path, target, cfg, std::cout, std::cerr);
}
