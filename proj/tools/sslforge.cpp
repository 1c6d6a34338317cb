// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// sslforge: generate self-supervised visual puzzle datasets, grade response
// dumps, and report random baselines.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sslforge/errors.hpp"
#include "sslforge/evalharness.hpp"
#include "sslforge/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

std::vector<sslforge::TaskKind> parse_task_list(const std::string& csv) {
    std::vector<sslforge::TaskKind> tasks;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string name =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!name.empty()) {
            const auto kind = sslforge::task_from_string(name);
            if (!kind) throw CLI::ValidationError("--tasks", "unknown task \"" + name + "\"");
            tasks.push_back(*kind);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (tasks.empty()) throw CLI::ValidationError("--tasks", "no tasks given");
    return tasks;
}

int run_generate(const std::string& images, const std::string& out,
                 const std::string& tasks_csv, int per_task, const std::string& difficulty,
                 std::uint64_t seed, bool embed, int workers) {
    sslforge::GenerateOptions options;
    options.image_dir = images;
    options.out_dir = out;
    options.tasks = parse_task_list(tasks_csv);
    options.per_task = per_task;
    const auto level = sslforge::difficulty_from_string(difficulty);
    if (!level) throw CLI::ValidationError("--difficulty", "expected easy|hard|mixed");
    options.difficulty = *level;
    options.seed = seed;
    options.embed = embed;
    options.workers = workers;

    const sslforge::Manifest manifest = sslforge::generate_dataset(options);
    std::printf("wrote %d records to %s (seed %llu, %d source images)\n",
                manifest.record_count, out.c_str(),
                static_cast<unsigned long long>(manifest.seed), manifest.image_count);
    for (const auto& [task, counts] : manifest.per_task) {
        std::printf("  %-15s generated %d / %d", task.c_str(), counts.generated,
                    counts.requested);
        if (counts.skipped > 0) std::printf("  (skipped %d)", counts.skipped);
        std::printf("\n");
    }
    return kExitOk;
}

int run_score(const std::string& dataset, const std::string& responses,
              const std::string& report_path, const std::string& dump_path) {
    const auto records = sslforge::read_records(dataset);
    const auto resp = sslforge::read_responses(responses);
    const sslforge::ScoreResult result = sslforge::score_responses(records, resp);
    const std::string report = sslforge::render_report(result);

    std::fputs(report.c_str(), stdout);
    if (!report_path.empty()) {
        std::FILE* f = std::fopen(report_path.c_str(), "wb");
        if (!f) throw sslforge::IoError("cannot write " + report_path);
        std::fputs(report.c_str(), f);
        std::fclose(f);
    }
    if (!dump_path.empty()) sslforge::write_reward_dump(result, dump_path);
    return kExitOk;
}

int run_baseline(const std::string& task, const std::string& difficulty, int trials,
                 std::uint64_t seed) {
    const auto kind = sslforge::task_from_string(task);
    if (!kind) throw CLI::ValidationError("--task", "unknown task \"" + task + "\"");

    sslforge::DifficultyProfile profile;
    if (difficulty == "easy") {
        profile = sslforge::DifficultyProfile::easy();
    } else if (difficulty == "hard") {
        profile = sslforge::DifficultyProfile::hard();
    } else if (auto p = sslforge::profile_from_label(*kind, difficulty)) {
        profile = *p;  // also accept per-task labels like "s4" or "3x3"
    } else {
        throw CLI::ValidationError("--difficulty", "expected easy|hard or a task label");
    }

    std::printf("task: %s\n", task.c_str());
    std::printf("difficulty: %s\n", sslforge::difficulty_label(*kind, profile).c_str());
    std::printf("analytic: %.4f%%\n", sslforge::random_baseline(*kind, profile) * 100.0);
    if (trials > 0) {
        sslforge::RandomSource rng(seed);
        const double mc = sslforge::monte_carlo_baseline(*kind, profile, trials, rng);
        std::printf("monte_carlo: %.4f%% (%d trials, seed %llu)\n", mc * 100.0, trials,
                    static_cast<unsigned long long>(seed));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-supervised visual puzzle generator and verifiable-reward grader"};
    app.require_subcommand(1);

    // generate
    std::string gen_images, gen_out;
    std::string gen_tasks = "rotation,similarity,inpainting,ordering,correspondence";
    std::string gen_difficulty = "mixed";
    int gen_per_task = 0;
    std::uint64_t gen_seed = 0;
    bool gen_embed = false;
    int gen_workers = 1;
    CLI::App* generate = app.add_subcommand("generate", "synthesise a puzzle dataset");
    generate->add_option("--images", gen_images, "directory of source images")->required();
    generate->add_option("--out", gen_out, "output directory")->required();
    generate->add_option("--tasks", gen_tasks, "comma-separated task names");
    generate->add_option("--per-task", gen_per_task, "records per task")->required();
    generate->add_option("--difficulty", gen_difficulty, "easy|hard|mixed");
    generate->add_option("--seed", gen_seed, "64-bit generation seed")
        ->envname("SSLFORGE_SEED");
    generate->add_flag("--embed", gen_embed, "inline PNG payloads as base64");
    generate->add_option("--workers", gen_workers, "worker threads")
        ->check(CLI::PositiveNumber);

    // score
    std::string score_dataset, score_responses_path, score_report, score_dump;
    CLI::App* score = app.add_subcommand("score", "grade a response dump against a dataset");
    score->add_option("--dataset", score_dataset, "data.jsonl path")->required();
    score->add_option("--responses", score_responses_path, "responses .jsonl path")->required();
    score->add_option("--report", score_report, "write the report table here");
    score->add_option("--dump", score_dump, "write per-record rewards .jsonl here");

    // baseline
    std::string base_task, base_difficulty = "hard";
    int base_trials = 0;
    std::uint64_t base_seed = 0;
    CLI::App* baseline = app.add_subcommand("baseline", "random-answer baseline for a task");
    baseline->add_option("--task", base_task, "task name")->required();
    baseline->add_option("--difficulty", base_difficulty, "easy|hard or a task label");
    baseline->add_option("--trials", base_trials, "Monte-Carlo trials (0 = analytic only)");
    baseline->add_option("--seed", base_seed, "Monte-Carlo seed")->envname("SSLFORGE_SEED");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) {
            return run_generate(gen_images, gen_out, gen_tasks, gen_per_task, gen_difficulty,
                                gen_seed, gen_embed, gen_workers);
        }
        if (score->parsed()) {
            return run_score(score_dataset, score_responses_path, score_report, score_dump);
        }
        if (baseline->parsed()) {
            return run_baseline(base_task, base_difficulty, base_trials, base_seed);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const sslforge::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const sslforge::DecodeError& e) {
        std::fprintf(stderr, "decode error: %s\n", e.what());
        return kExitIo;
    } catch (const sslforge::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
