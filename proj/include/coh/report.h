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

#ifndef COH_REPORT_H
#define COH_REPORT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace coh {

enum class RecordKind { Trial, Control, NegativeControl };
enum class RecordStatus { Pass, Fail, ExpectedFailure, UnexpectedPass };

std::string to_string(RecordKind k);
std::string to_string(RecordStatus s);

struct TrialRecord {
    std::size_t index = 0;
    RecordKind kind = RecordKind::Trial;
    std::uint64_t seed = 0;
    /// Insertion-ordered so serialized output is stable.
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    RecordStatus status = RecordStatus::Pass;
    /// Margin by which the checked inequality holds; negative on failure.
    double slack = 0;
    std::string note;

    bool ok() const;
};

struct Aggregate {
    double min_slack = 0;
    double max_slack = 0;
    double mean_slack = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct NoGoReport {
    std::string lemma;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<TrialRecord> records;
    Aggregate aggregate;
    bool pass = false;

    /// Sorts records by index, fills the aggregate over Trial records and sets the verdict:
    /// pass iff every trial and control passed and every negative control failed as expected.
    void finalize();
    std::string verdict() const {
        return pass ? "pass" : "fail";
    }
};

nlohmann::ordered_json to_json(const NoGoReport &r);
/// Pretty-printed JSON with a trailing newline.
std::string report_json(const NoGoReport &r);
/// One row per record; parameter and value columns are the union of keys in first-seen order.
std::string report_csv(const NoGoReport &r);

}  // namespace coh

#endif
