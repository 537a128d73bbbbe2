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

#include "coh/harness.h"

#include <sstream>

#include "gtest/gtest.h"

#include "coh/channel.h"
#include "coh/coherence.h"
#include "coh/report.h"
#include "json.hpp"

using namespace coh;

namespace {

HarnessConfig small(std::size_t n, std::size_t k, std::size_t a, std::size_t trials, std::uint64_t seed = 0) {
    HarnessConfig c;
    c.n = n;
    c.k = k;
    c.ancilla_qubits = a;
    c.trials = trials;
    c.seed = seed;
    return c;
}

std::size_t count_kind(const NoGoReport &r, RecordKind k) {
    std::size_t n = 0;
    for (const auto &rec : r.records) {
        n += rec.kind == k ? 1 : 0;
    }
    return n;
}

}  // namespace

TEST(harness, incoherent_realizations_are_incoherent) {
    Rng rng(191);
    for (std::size_t v = 0; v < 16; ++v) {
        const std::size_t n = 1 + v % 3;
        const std::size_t a = v % 3;
        const IncoherentRealization r = random_incoherent_realization(n, a, v, rng);
        ASSERT_EQ(r.unitary.rows(), std::size_t{1} << (n + a)) << r.generator;
        ASSERT_EQ(r.tau.dim(), std::size_t{1} << a);
        ASSERT_TRUE(classify_incoherent_unitary(r.unitary).has_value()) << r.generator;
    }
}

TEST(harness, exact_nogo_passes) {
    const NoGoReport r = verify_exact_nogo(small(1, 0, 2, 30));
    ASSERT_TRUE(r.pass);
    ASSERT_EQ(count_kind(r, RecordKind::Trial), 30u);
    ASSERT_EQ(count_kind(r, RecordKind::Control), 3u);
    for (const auto &rec : r.records) {
        ASSERT_EQ(rec.values["coherent_unitaries"].get<int>(), 0);
        if (rec.values.contains("dephasing_commutator_max")) {
            ASSERT_LE(rec.values["dephasing_commutator_max"].get<double>(), 1e-9);
        }
    }
}

TEST(harness, exact_nogo_two_qubits) {
    ASSERT_TRUE(verify_exact_nogo(small(2, 0, 2, 12)).pass);
}

TEST(harness, approx_bound_n1) {
    const NoGoReport r = verify_approx_bound(small(1, 0, 2, 20));
    ASSERT_TRUE(r.pass);
    for (const auto &rec : r.records) {
        ASSERT_GE(rec.values["certified_bound"].get<double>(), 0.5 - 1e-9);
    }
}

TEST(harness, approx_bound_control_is_tight) {
    const NoGoReport r = verify_approx_bound(small(2, 0, 1, 4));
    ASSERT_TRUE(r.pass);
    bool seen = false;
    for (const auto &rec : r.records) {
        if (rec.kind == RecordKind::Control) {
            seen = true;
            ASSERT_NEAR(rec.values["certified_bound"].get<double>(), 0.75, 1e-12);
            ASSERT_LE(std::abs(rec.slack), 1e-9);
        }
    }
    ASSERT_TRUE(seen);
}

TEST(harness, approx_rejects_bad_config) {
    ASSERT_THROW(run_campaign("approx", small(1, 1, 1, 1)), std::invalid_argument);
    ASSERT_THROW(run_campaign("approx", small(5, 0, 1, 1)), std::invalid_argument);
}

TEST(harness, ancilla_independence) {
    const NoGoReport r = verify_ancilla_independence(small(1, 0, 1, 20));
    ASSERT_TRUE(r.pass);
    ASSERT_EQ(count_kind(r, RecordKind::NegativeControl), 1u);
    for (const auto &rec : r.records) {
        if (rec.kind == RecordKind::NegativeControl) {
            ASSERT_EQ(rec.status, RecordStatus::ExpectedFailure);
            ASSERT_NEAR(rec.values["max_pairwise_distance"].get<double>(), 1.0, 1e-12);
        } else {
            ASSERT_LE(rec.values["max_pairwise_distance"].get<double>(), 1e-9);
        }
    }
}

TEST(harness, kton_worked_example) {
    const NoGoReport r = verify_kton(small(2, 1, 2, 20));
    ASSERT_TRUE(r.pass);
    for (const auto &rec : r.records) {
        if (rec.kind != RecordKind::Trial) {
            continue;
        }
        ASSERT_TRUE(rec.values["contradiction"].get<bool>());
        if (rec.parameters["a"].get<int>() == 0) {
            ASSERT_LE(rec.values["plus_overlap_sq"].get<double>(), 0.5 + 1e-9);
        }
    }
}

TEST(harness, kton_single_qubit_overlap_is_half) {
    // With k = 0 on one qubit every incoherent U sends |0⟩ to a basis state, so |⟨+|U|0⟩|² = 1/2.
    const NoGoReport r = verify_kton(small(1, 0, 0, 10));
    ASSERT_TRUE(r.pass);
    for (const auto &rec : r.records) {
        if (rec.kind == RecordKind::Trial) {
            ASSERT_NEAR(rec.values["plus_overlap_sq"].get<double>(), 0.5, 1e-12);
        }
    }
}

TEST(harness, kton_control_saturates) {
    const NoGoReport r = verify_kton(small(2, 1, 0, 1));
    bool seen = false;
    for (const auto &rec : r.records) {
        if (rec.kind == RecordKind::Control) {
            seen = true;
            ASSERT_TRUE(rec.ok());
            ASSERT_NEAR(rec.values["plus_overlap_sq"].get<double>(), 1.0, 1e-12);
        }
    }
    ASSERT_TRUE(seen);
}

TEST(harness, kton_preconditions) {
    ASSERT_THROW(run_campaign("kton", small(2, 2, 0, 1)), std::invalid_argument);
    ASSERT_THROW(run_campaign("kton", small(5, 1, 0, 1)), std::invalid_argument);
}

TEST(harness, rank_ladder) {
    const NoGoReport r = verify_rank_ladder(small(4, 3, 0, 40));
    ASSERT_TRUE(r.pass);
    for (const auto &rec : r.records) {
        const double in = rec.values["rank_in"].get<double>();
        const double out = rec.values["rank_out"].get<double>();
        const double scale = std::ldexp(1.0, rec.parameters["k"].get<int>());
        ASSERT_LE(in / scale, out);
        ASSERT_LE(out, scale * in);
    }
}

TEST(harness, unknown_campaign) {
    ASSERT_THROW(run_campaign("nope", small(1, 0, 1, 1)), std::invalid_argument);
    ASSERT_EQ(campaign_ids(), (std::vector<std::string>{"exact", "approx", "ancilla-indep", "kton", "rank-ladder"}));
}

TEST(harness, reports_are_reproducible) {
    for (const auto &id : campaign_ids()) {
        HarnessConfig c = small(id == "rank-ladder" ? 3 : 2, id == "kton" || id == "rank-ladder" ? 1 : 0, 1, 6, 99);
        const NoGoReport a = run_campaign(id, c);
        const NoGoReport b = run_campaign(id, c);
        ASSERT_EQ(report_json(a), report_json(b)) << id;
        ASSERT_EQ(report_csv(a), report_csv(b)) << id;
    }
}

TEST(harness, seeds_change_reports) {
    const NoGoReport a = run_campaign("exact", small(1, 0, 2, 6, 1));
    const NoGoReport b = run_campaign("exact", small(1, 0, 2, 6, 2));
    ASSERT_NE(report_json(a), report_json(b));
}

TEST(report, finalize_aggregates_trials_only) {
    NoGoReport r;
    r.lemma = "x";
    TrialRecord t1;
    t1.index = 1;
    t1.slack = 0.5;
    TrialRecord t0;
    t0.index = 0;
    t0.slack = 0.25;
    TrialRecord ctl;
    ctl.index = 2;
    ctl.kind = RecordKind::Control;
    ctl.slack = -7;
    TrialRecord neg;
    neg.index = 3;
    neg.kind = RecordKind::NegativeControl;
    neg.status = RecordStatus::ExpectedFailure;
    r.records = {t1, ctl, neg, t0};
    r.finalize();
    ASSERT_TRUE(r.pass);
    ASSERT_EQ(r.verdict(), "pass");
    ASSERT_EQ(r.records[0].index, 0u);
    ASSERT_EQ(r.aggregate.min_slack, 0.25);
    ASSERT_EQ(r.aggregate.max_slack, 0.5);
    ASSERT_EQ(r.aggregate.mean_slack, 0.375);
    ASSERT_EQ(r.aggregate.passed, 4u);
}

TEST(report, failures_and_unexpected_passes_fail_verdict) {
    NoGoReport r;
    TrialRecord bad;
    bad.status = RecordStatus::Fail;
    r.records = {bad};
    r.finalize();
    ASSERT_FALSE(r.pass);
    ASSERT_EQ(r.verdict(), "fail");

    TrialRecord neg;
    neg.kind = RecordKind::NegativeControl;
    neg.status = RecordStatus::UnexpectedPass;
    r.records = {neg};
    r.finalize();
    ASSERT_FALSE(r.pass);
    ASSERT_EQ(r.aggregate.failed, 1u);
}

TEST(report, json_schema) {
    const NoGoReport r = run_campaign("ancilla-indep", small(1, 0, 1, 3, 5));
    const auto j = nlohmann::json::parse(report_json(r));
    for (const char *key : {"lemma", "seed", "trials", "records", "aggregate", "verdict"}) {
        ASSERT_TRUE(j.contains(key)) << key;
    }
    ASSERT_EQ(j["seed"].get<int>(), 5);
    ASSERT_EQ(j["records"].size(), r.records.size());
    ASSERT_EQ(j["verdict"], "pass");
    ASSERT_EQ(j["records"][0]["kind"], "trial");
}

TEST(report, csv_one_row_per_record) {
    const NoGoReport r = run_campaign("kton", small(2, 1, 1, 4));
    const std::string csv = report_csv(r);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    ASSERT_EQ(header.rfind("lemma,seed,index,kind,status,slack,record_seed,", 0), 0u);
    const auto columns = std::count(header.begin(), header.end(), ',');
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        ASSERT_EQ(std::count(line.begin(), line.end(), ','), columns) << line;
    }
    ASSERT_EQ(rows, r.records.size());
}

TEST(report, csv_quotes_notes_with_commas) {
    NoGoReport r;
    r.lemma = "x";
    TrialRecord t;
    t.note = "a, \"b\"";
    r.records = {t};
    r.finalize();
    const std::string csv = report_csv(r);
    ASSERT_NE(csv.find("\"a, \"\"b\"\"\""), std::string::npos);
}
