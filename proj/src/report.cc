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

#include "coh/report.h"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace coh {

std::string to_string(RecordKind k) {
    switch (k) {
        case RecordKind::Trial:
            return "trial";
        case RecordKind::Control:
            return "control";
        case RecordKind::NegativeControl:
            break;
    }
    return "negative_control";
}

std::string to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::Pass:
            return "pass";
        case RecordStatus::Fail:
            return "fail";
        case RecordStatus::ExpectedFailure:
            return "expected_failure";
        case RecordStatus::UnexpectedPass:
            break;
    }
    return "unexpected_pass";
}

bool TrialRecord::ok() const {
    return kind == RecordKind::NegativeControl ? status == RecordStatus::ExpectedFailure : status == RecordStatus::Pass;
}

void NoGoReport::finalize() {
    std::stable_sort(records.begin(), records.end(), [](const TrialRecord &a, const TrialRecord &b) {
        return a.index < b.index;
    });
    aggregate = Aggregate{};
    double sum = 0;
    std::size_t count = 0;
    aggregate.min_slack = std::numeric_limits<double>::infinity();
    aggregate.max_slack = -std::numeric_limits<double>::infinity();
    pass = true;
    for (const auto &r : records) {
        if (r.ok()) {
            ++aggregate.passed;
        } else {
            ++aggregate.failed;
            pass = false;
        }
        if (r.kind != RecordKind::Trial) {
            continue;
        }
        aggregate.min_slack = std::min(aggregate.min_slack, r.slack);
        aggregate.max_slack = std::max(aggregate.max_slack, r.slack);
        sum += r.slack;
        ++count;
    }
    if (count == 0) {
        aggregate.min_slack = aggregate.max_slack = 0;
    } else {
        aggregate.mean_slack = sum / static_cast<double>(count);
    }
}

nlohmann::ordered_json to_json(const NoGoReport &r) {
    nlohmann::ordered_json j;
    j["lemma"] = r.lemma;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["config"] = r.config;
    auto &recs = j["records"] = nlohmann::ordered_json::array();
    for (const auto &t : r.records) {
        nlohmann::ordered_json rec;
        rec["index"] = t.index;
        rec["kind"] = to_string(t.kind);
        rec["seed"] = t.seed;
        rec["parameters"] = t.parameters;
        rec["values"] = t.values;
        rec["status"] = to_string(t.status);
        rec["slack"] = t.slack;
        if (!t.note.empty()) {
            rec["note"] = t.note;
        }
        recs.push_back(std::move(rec));
    }
    j["aggregate"] = {
        {"min_slack", r.aggregate.min_slack},
        {"max_slack", r.aggregate.max_slack},
        {"mean_slack", r.aggregate.mean_slack},
        {"passed", r.aggregate.passed},
        {"failed", r.aggregate.failed},
    };
    j["verdict"] = r.verdict();
    return j;
}

std::string report_json(const NoGoReport &r) {
    return to_json(r).dump(2) + "\n";
}

namespace {

std::string csv_cell(const nlohmann::ordered_json &v) {
    std::string s;
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        s = buf;
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') {
                q += '"';
            }
        }
        return q + "\"";
    }
    return s;
}

void collect_keys(const nlohmann::ordered_json &obj, std::vector<std::string> &keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
            keys.push_back(it.key());
        }
    }
}

}  // namespace

std::string report_csv(const NoGoReport &r) {
    std::vector<std::string> params;
    std::vector<std::string> values;
    for (const auto &t : r.records) {
        collect_keys(t.parameters, params);
        collect_keys(t.values, values);
    }
    std::string out = "lemma,seed,index,kind,status,slack,record_seed";
    for (const auto &p : params) {
        out += ",param." + p;
    }
    for (const auto &v : values) {
        out += ",value." + v;
    }
    out += ",note\n";
    for (const auto &t : r.records) {
        out += csv_cell(r.lemma) + "," + std::to_string(r.seed) + "," + std::to_string(t.index) + "," +
               to_string(t.kind) + "," + to_string(t.status) + "," + csv_cell(nlohmann::ordered_json(t.slack)) + "," +
               std::to_string(t.seed);
        for (const auto &p : params) {
            out += "," + csv_cell(t.parameters.contains(p) ? t.parameters[p] : nlohmann::ordered_json());
        }
        for (const auto &v : values) {
            out += "," + csv_cell(t.values.contains(v) ? t.values[v] : nlohmann::ordered_json());
        }
        out += "," + csv_cell(t.note) + "\n";
    }
    return out;
}

}  // namespace coh
