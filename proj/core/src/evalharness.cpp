// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/evalharness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "sslforge/errors.hpp"

namespace sslforge {

using nlohmann::json;

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", fraction * 100.0);
    return buf;
}

std::string fixed3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

struct Accumulator {
    int n = 0;
    int missing = 0;
    double format_sum = 0.0;
    double accuracy_sum = 0.0;
    double total_sum = 0.0;
    int exact = 0;
};

}  // namespace

double random_baseline(TaskKind kind, const DifficultyProfile& profile) {
    switch (kind) {
        case TaskKind::Rotation:
            return 1.0 / profile.rotation_s;
        case TaskKind::Similarity:
        case TaskKind::Inpainting:
            return 1.0 / 4.0;
        case TaskKind::Ordering:
            return 1.0 / factorial(profile.grid_rows * profile.grid_cols);
        case TaskKind::Correspondence:
            return 1.0 / factorial(profile.points_k);
    }
    return 0.0;
}

AnswerValue random_answer(TaskKind kind, const DifficultyProfile& profile,
                          RandomSource& rng) {
    switch (kind) {
        case TaskKind::Rotation: {
            const int step = 360 / profile.rotation_s;
            return Angle{step * rng.uniform_int(0, profile.rotation_s - 1)};
        }
        case TaskKind::Similarity:
        case TaskKind::Inpainting:
            return Choice{rng.uniform_int(0, 3)};
        case TaskKind::Ordering:
            return sample_permutation(profile.grid_rows * profile.grid_cols, rng).forward;
        case TaskKind::Correspondence:
            return sample_permutation(profile.points_k, rng).forward;
    }
    return Angle{0};
}

double monte_carlo_baseline(TaskKind kind, const DifficultyProfile& profile,
                            int trials, RandomSource& rng) {
    if (trials < 1) throw Error("trials must be >= 1");
    int hits = 0;
    for (int i = 0; i < trials; ++i) {
        const AnswerValue truth = random_answer(kind, profile, rng);
        const AnswerValue guess = random_answer(kind, profile, rng);
        if (exact_match(kind, guess, truth)) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

ScoreResult score_responses(const std::vector<DatasetRecord>& records,
                            const std::vector<ResponseRecord>& responses) {
    std::unordered_map<std::string, const ResponseRecord*> by_id;
    by_id.reserve(responses.size());
    for (const ResponseRecord& r : responses) by_id[r.id] = &r;

    std::map<std::pair<std::string, std::string>, Accumulator> slices;
    ScoreResult result;
    result.dump.reserve(records.size());

    std::unordered_map<std::string, bool> matched;
    matched.reserve(responses.size());

    for (const DatasetRecord& record : records) {
        const auto kind = task_from_string(record.task);
        if (!kind) throw SchemaError("unknown task in record " + record.id);
        Accumulator& acc = slices[{record.task, record.difficulty}];
        ++acc.n;

        RecordScore score;
        score.id = record.id;
        const auto it = by_id.find(record.id);
        if (it == by_id.end()) {
            score.missing = true;
            ++acc.missing;
            ++result.missing_responses;
        } else {
            matched[record.id] = true;
            const auto truth = parse_answer(*kind, record.answer);
            if (!truth) throw SchemaError("unparseable answer in record " + record.id);
            const GradeResult grade = grade_response(*kind, it->second->response, *truth);
            score.accuracy = grade.reward.accuracy;
            score.format = grade.reward.format;
            score.total = grade.reward.total;
            score.exact = grade.exact;
        }
        acc.accuracy_sum += score.accuracy;
        acc.format_sum += score.format > 0.0 ? 1.0 : 0.0;
        acc.total_sum += score.total;
        acc.exact += score.exact ? 1 : 0;
        result.dump.push_back(std::move(score));
    }
    for (const ResponseRecord& r : responses) {
        if (!matched.count(r.id)) ++result.unknown_ids;
    }

    for (const auto& [key, acc] : slices) {
        TaskReport report;
        report.task = key.first;
        report.difficulty = key.second;
        report.n = acc.n;
        report.missing = acc.missing;
        if (acc.n > 0) {
            report.format_rate = acc.format_sum / acc.n;
            report.mean_accuracy = acc.accuracy_sum / acc.n;
            report.mean_total = acc.total_sum / acc.n;
            report.exact_match = static_cast<double>(acc.exact) / acc.n;
        }
        const auto kind = task_from_string(key.first);
        const auto profile = profile_from_label(*kind, key.second);
        report.random_baseline = profile ? random_baseline(*kind, *profile) : 0.0;
        result.reports.push_back(std::move(report));
    }

    if (!result.reports.empty()) {
        for (const TaskReport& r : result.reports) {
            result.overall_exact += r.exact_match;
            result.overall_accuracy += r.mean_accuracy;
            result.overall_total += r.mean_total;
            result.overall_format += r.format_rate;
        }
        const double count = static_cast<double>(result.reports.size());
        result.overall_exact /= count;
        result.overall_accuracy /= count;
        result.overall_total /= count;
        result.overall_format /= count;
    }
    return result;
}

std::string render_report(const ScoreResult& result) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"task", "difficulty", "n", "missing", "format", "accuracy",
                    "total", "exact", "random"});
    for (const TaskReport& r : result.reports) {
        rows.push_back({r.task, r.difficulty, std::to_string(r.n),
                        std::to_string(r.missing), percent(r.format_rate),
                        percent(r.mean_accuracy), fixed3(r.mean_total),
                        percent(r.exact_match), percent(r.random_baseline)});
    }
    rows.push_back({"average", "-", "-", "-", percent(result.overall_format),
                    percent(result.overall_accuracy), fixed3(result.overall_total),
                    percent(result.overall_exact), "-"});

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    const auto emit_row = [&](const std::vector<std::string>& row) {
        out += '|';
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += ' ';
            out += row[c];
            out.append(widths[c] - row[c].size() + 1, ' ');
            out += '|';
        }
        out += '\n';
    };
    emit_row(rows[0]);
    out += '|';
    for (std::size_t c = 0; c < widths.size(); ++c) {
        out.append(widths[c] + 2, '-');
        out += '|';
    }
    out += '\n';
    for (std::size_t i = 1; i < rows.size(); ++i) emit_row(rows[i]);
    if (result.missing_responses > 0 || result.unknown_ids > 0) {
        out += "\nmissing responses: " + std::to_string(result.missing_responses) +
               ", unknown response ids: " + std::to_string(result.unknown_ids) + "\n";
    }
    return out;
}

std::vector<ResponseRecord> read_responses(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<ResponseRecord> responses;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j.contains("response") || !j["id"].is_string() || !j["response"].is_string()) {
            throw SchemaError(path.filename().string() + ":" + std::to_string(line_no) +
                              ": expected {\"id\": string, \"response\": string}");
        }
        responses.push_back({j["id"].get<std::string>(), j["response"].get<std::string>()});
    }
    return responses;
}

void write_reward_dump(const ScoreResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const RecordScore& s : result.dump) {
        json j;
        j["id"] = s.id;
        j["accuracy"] = s.accuracy;
        j["format"] = s.format;
        j["total"] = s.total;
        j["exact"] = s.exact;
        j["missing"] = s.missing;
        out << j.dump() << '\n';
    }
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace sslforge
