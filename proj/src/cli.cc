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

#include "coh/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "coh/analysis.h"
#include "coh/circuit_parser.h"
#include "coh/coherence.h"
#include "coh/distance.h"
#include "coh/errors.h"
#include "coh/gadgets.h"
#include "coh/gates.h"
#include "coh/harness.h"
#include "coh/simulator.h"
#include "json.hpp"

namespace coh {

namespace {

std::string fmt(double x, const char *spec = "%.12g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string render_state(const PureState &psi) {
    std::string s = "[";
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        if (k) {
            s += ", ";
        }
        const Complex z = psi[k];
        s += fmt(z.real(), "%.6f") + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag()), "%.6f") + "i";
    }
    return s + "]";
}

bool write_file(const std::string &path, const std::string &text, std::ostream &err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

}  // namespace

int cmd_analyze(const std::string &circuit_path, std::ostream &out, std::ostream &err) {
    Circuit c;
    try {
        c = parse_circuit_file(circuit_path);
    } catch (const ParseError &e) {
        err << "error: " << circuit_path << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << "circuit: " << circuit_path << "\n";
    out << "qubits: " << c.num_qubits() << ", cbits: " << c.num_cbits() << ", ops: " << c.ops().size() << "\n";
    out << "  #  class                op\n";
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        char line[64];
        std::snprintf(line, sizeof line, "%3zu  %-20s ", i, to_string(classify_op(c.ops()[i])).c_str());
        out << line << describe_op(c.ops()[i]) << "\n";
    }
    std::size_t k = 0;
    try {
        k = hadamard_count(c);
    } catch (const UnclassifiableGate &e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    out << "hadamard count k: " << k << "\n";
    const double lo = std::ldexp(1.0, -static_cast<int>(k));
    const double hi = std::ldexp(1.0, static_cast<int>(k));
    out << "rank window for |0...0>: [2^-k, 2^k] * chi = [" << fmt(lo) << ", " << fmt(hi) << "]\n";
    const PureState zero = PureState::basis(std::size_t{1} << c.num_qubits(), 0);
    for (const auto &b : simulate(c, zero).branches) {
        const std::size_t chi = coherence_rank(b.state).value;
        out << "  branch '" << b.record << "' p=" << fmt(b.probability, "%.6f") << " chi=" << chi
            << (chi >= lo && chi <= hi ? " (in window)" : " (OUTSIDE window)") << "\n";
    }
    return kExitPass;
}

int cmd_verify_gadget(
    const std::string &name, std::optional<std::size_t> k, const std::optional<std::string> &ancilla, std::ostream &out,
    std::ostream &err) {
    Gadget g;
    try {
        if (name == "diagonal_uk") {
            if (!k) {
                err << "error: diagonal_uk needs --k\n";
                return kExitUsage;
            }
            g = diagonal_uk(*k);
        } else {
            g = gadget_library(name);
        }
        if (ancilla) {
            PureState a = state_from_spec(*ancilla);
            if (a.dim() != g.ancilla.dim()) {
                err << "error: ancilla '" << *ancilla << "' has dimension " << a.dim() << ", gadget needs "
                    << g.ancilla.dim() << "\n";
                return kExitUsage;
            }
            g.ancilla = std::move(a);
            g.ancilla_spec = *ancilla;
        }
    } catch (const UnknownGadget &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const GadgetCheck check = verify_gadget(g);
    out << "gadget: " << g.name << "\n";
    out << "ancilla: " << g.ancilla_spec << "\n";
    out << "branches: " << check.branches << "\n";
    out << "choi distance: " << fmt(check.choi_distance, "%.3e") << "\n";
    out << "max state distance (20 Haar inputs): " << fmt(check.max_state_distance, "%.3e") << "\n";
    out << "result: " << (check.passed ? "PASS" : "FAIL") << "\n";
    return check.passed ? kExitPass : kExitFail;
}

int cmd_nogo(const std::string &campaign, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto ids = campaign_ids();
    if (std::find(ids.begin(), ids.end(), campaign) == ids.end()) {
        err << "error: unknown campaign '" << campaign << "' (expected exact, approx, ancilla-indep, kton, rank-ladder)\n";
        return kExitUsage;
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        err << "error: --format must be json or csv\n";
        return kExitUsage;
    }
    HarnessConfig h;
    h.trials = cfg.trials;
    h.seed = cfg.seed;
    if (campaign == "kton") {
        h.n = 2;
        h.k = 1;
        h.ancilla_qubits = 2;
    } else if (campaign == "rank-ladder") {
        h.n = 4;
        h.k = 3;
    } else if (campaign == "exact" || campaign == "approx") {
        h.ancilla_qubits = 2;
    }
    if (cfg.n) {
        h.n = *cfg.n;
    }
    if (cfg.k) {
        h.k = *cfg.k;
    }
    if (cfg.ancilla_qubits) {
        h.ancilla_qubits = *cfg.ancilla_qubits;
    }
    if (cfg.tol) {
        h.tol = *cfg.tol;
    }
    NoGoReport report;
    try {
        report = run_campaign(campaign, h);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!cfg.out_path.empty()) {
        const std::string text = cfg.format == "csv" ? report_csv(report) : report_json(report);
        if (!write_file(cfg.out_path, text, err)) {
            return kExitUsage;
        }
    }
    out << "campaign: " << report.lemma << " (n=" << h.n << ", k=" << h.k << ", ancilla-qubits=" << h.ancilla_qubits
        << ", trials=" << report.trials << ", seed=" << report.seed << ")\n";
    out << "records: " << report.records.size() << ", passed: " << report.aggregate.passed
        << ", failed: " << report.aggregate.failed << "\n";
    out << "slack: min " << fmt(report.aggregate.min_slack) << ", max " << fmt(report.aggregate.max_slack) << ", mean "
        << fmt(report.aggregate.mean_slack) << "\n";
    for (const auto &r : report.records) {
        if (!r.ok()) {
            out << "  failing record " << r.index << ": " << r.values.dump() << "\n";
        }
    }
    if (!cfg.out_path.empty()) {
        out << "report: " << cfg.out_path << "\n";
    }
    out << "verdict: " << report.verdict() << "\n";
    return report.pass ? kExitPass : kExitFail;
}

namespace {

struct ChannelSpec {
    Circuit circuit;
    std::size_t ancilla_qubits = 0;
    PureState ancilla;
    std::vector<std::size_t> trace;
};

ChannelSpec load_channel_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument(path + ": expected a JSON object");
    }
    ChannelSpec s;
    const bool has_circuit = j.contains("circuit");
    const bool has_unitary = j.contains("unitary");
    if (has_circuit == has_unitary) {
        throw std::invalid_argument(path + ": give exactly one of 'circuit' and 'unitary'");
    }
    if (has_circuit) {
        std::filesystem::path p = j.at("circuit").get<std::string>();
        if (p.is_relative()) {
            p = std::filesystem::path(path).parent_path() / p;
        }
        s.circuit = parse_circuit_file(p.string());
    } else {
        const std::string u = j.at("unitary").get<std::string>();
        std::size_t arity = 1;
        if (auto m = gates::by_name(u)) {
            arity = m->rows() == 2 ? 1 : m->rows() == 4 ? 2 : 3;
        } else if (u.rfind("U4:", 0) == 0) {
            arity = 2;
        }
        std::string text = "qubits " + std::to_string(arity) + "\ngate " + u;
        for (std::size_t q = 0; q < arity; ++q) {
            text += " " + std::to_string(q);
        }
        s.circuit = parse_circuit(text + "\n");
    }
    const std::string anc = j.value("ancilla", std::string());
    s.ancilla = state_from_spec(anc);
    std::size_t a = 0;
    while ((std::size_t{1} << a) < s.ancilla.dim()) {
        ++a;
    }
    if ((std::size_t{1} << a) != s.ancilla.dim() || a > s.circuit.num_qubits()) {
        throw std::invalid_argument(path + ": ancilla does not fit the register");
    }
    s.ancilla_qubits = a;
    if (j.contains("trace")) {
        s.trace = j.at("trace").get<std::vector<std::size_t>>();
    }
    for (auto w : s.trace) {
        if (w >= s.circuit.num_qubits()) {
            throw std::invalid_argument(path + ": traced wire " + std::to_string(w) + " out of range");
        }
    }
    return s;
}

}  // namespace

int cmd_distance(
    const std::string &spec_path, const std::string &target, const RunConfig &cfg, std::ostream &out,
    std::ostream &err) {
    std::size_t n = 0;
    if (target.rfind("hadamard:", 0) != 0) {
        err << "error: target must be hadamard:<n>\n";
        return kExitUsage;
    }
    try {
        n = std::stoul(target.substr(9));
    } catch (const std::exception &) {
        err << "error: target must be hadamard:<n>\n";
        return kExitUsage;
    }
    ChannelSpec spec;
    try {
        spec = load_channel_spec(spec_path);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const std::size_t total = spec.circuit.num_qubits();
    const std::size_t sys = total - spec.ancilla_qubits;
    WireMap wires;
    for (std::size_t q = 0; q < total; ++q) {
        (q < sys ? wires.input : wires.ancilla).push_back(q);
        if (std::find(spec.trace.begin(), spec.trace.end(), q) == spec.trace.end()) {
            wires.output.push_back(q);
        }
    }
    if (n == 0 || wires.output.size() != n || sys != n) {
        err << "error: channel maps " << sys << " to " << wires.output.size() << " qubits; target needs " << n << "\n";
        return kExitUsage;
    }
    const QuantumChannel ch = circuit_channel(spec.circuit, wires, DensityMatrix::pure(spec.ancilla));
    const ComplexMatrix h = gates::hadamard_power(n);
    InducedDistanceOptions opt;
    const InducedDistance d = induced_distance_lower(ch, h, cfg.seed, opt);

    nlohmann::ordered_json report;
    report["spec"] = spec_path;
    report["target"] = target;
    report["seed"] = cfg.seed;
    report["induced_distance_lower"] = d.value;
    report["witness_start_index"] = d.start_index;
    out << "induced distance lower bound: " << fmt(d.value, "%.9f") << "\n";
    out << "witness: " << render_state(d.witness) << "\n";

    // The certified bound needs the ancilla-free map (system ⊗ ancilla) → output.
    WireMap free_wires{wires.input, {}, wires.output};
    free_wires.input.insert(free_wires.input.end(), wires.ancilla.begin(), wires.ancilla.end());
    const QuantumChannel free = circuit_channel(spec.circuit, free_wires, DensityMatrix::trusted(ComplexMatrix::identity(1)));
    if (is_dephasing_covariant(free, cfg.tol.value_or(1e-9))) {
        const NogoBound b = certified_nogo_bound(free, n, DensityMatrix::pure(spec.ancilla), cfg.tol.value_or(1e-9));
        out << "certified bound: " << fmt(b.bound, "%.9f") << " (witness H^n|" << bitstring(b.witness_basis_index, n)
            << ">)\n";
        report["certified_bound"] = b.bound;
        report["certified_witness_basis"] = bitstring(b.witness_basis_index, n);
    } else {
        out << "certified bound: n/a (realization does not commute with dephasing)\n";
        report["certified_bound"] = nullptr;
    }
    if (!cfg.out_path.empty() && !write_file(cfg.out_path, report.dump(2) + "\n", err)) {
        return kExitUsage;
    }
    return kExitPass;
}

}  // namespace coh
