// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sslforge/pipeline.hpp"
#include "sslforge/random.hpp"
#include "sslforge/rewards.hpp"
#include "sslforge/taskgen.hpp"

namespace sslforge {

/// One raw model response keyed by dataset record id.
struct ResponseRecord {
    std::string id;
    std::string response;
};

/// Aggregated scores for one (task, difficulty) slice.
struct TaskReport {
    std::string task;
    std::string difficulty;
    int n = 0;
    int missing = 0;
    double format_rate = 0.0;
    double mean_accuracy = 0.0;
    double mean_total = 0.0;
    double exact_match = 0.0;
    double random_baseline = 0.0;
};

struct RecordScore {
    std::string id;
    double accuracy = 0.0;
    double format = 0.0;
    double total = 0.0;
    bool exact = false;
    bool missing = false;
};

struct ScoreResult {
    std::vector<TaskReport> reports;  // sorted by (task, difficulty)
    // Unweighted means over the report rows, mirroring the usual "Avg." row.
    double overall_exact = 0.0;
    double overall_accuracy = 0.0;
    double overall_total = 0.0;
    double overall_format = 0.0;
    std::vector<RecordScore> dump;  // one entry per dataset record, in order
    int missing_responses = 0;
    int unknown_ids = 0;  // response ids with no dataset record
};

/// Analytic exact-match chance of a uniform random answerer:
/// 1/S, 1/4, 1/4, 1/(M*N)!, 1/K!.
double random_baseline(TaskKind kind, const DifficultyProfile& profile);

/// A uniformly drawn well-formed answer for the given task shape.
AnswerValue random_answer(TaskKind kind, const DifficultyProfile& profile,
                          RandomSource& rng);

/// Fraction of `trials` where a uniform random answer exact-matches a fresh
/// uniform ground truth.
double monte_carlo_baseline(TaskKind kind, const DifficultyProfile& profile,
                            int trials, RandomSource& rng);

/// Grade responses against a dataset. Records without a response are scored
/// zero and counted; response ids with no record are tallied as unknown.
ScoreResult score_responses(const std::vector<DatasetRecord>& records,
                            const std::vector<ResponseRecord>& responses);

/// Markdown table of per-slice reports plus the average row.
std::string render_report(const ScoreResult& result);

/// Parse a responses .jsonl file ({"id": ..., "response": ...} per line).
std::vector<ResponseRecord> read_responses(const std::filesystem::path& path);

/// Write the per-record reward dump as .jsonl.
void write_reward_dump(const ScoreResult& result, const std::filesystem::path& path);

}  // namespace sslforge
