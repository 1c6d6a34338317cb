// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sslforge/random.hpp"
#include "sslforge/taskgen.hpp"

namespace sslforge {

inline constexpr const char* kToolVersion = "0.1.0";

enum class DifficultySetting { Easy, Hard, Mixed };

const char* to_string(DifficultySetting d);
std::optional<DifficultySetting> difficulty_from_string(std::string_view name);

/// Serialized image payload: a relative PNG path, or base64 PNG bytes when
/// the dataset was generated with embed = true.
struct ImageRef {
    std::string role;
    std::string path;      // empty when embedded
    std::string data_b64;  // empty when referenced by path
};

/// One line of data.jsonl.
struct DatasetRecord {
    std::string id;  // "{task}-{image_index}-{sample_index}"
    std::string task;
    std::string difficulty;
    std::string prompt;
    std::vector<ImageRef> images;
    std::string answer;       // canonical text
    std::string answer_kind;  // angle | choice | permutation
    std::string params_json;  // task parameters, enough to re-verify the answer
    std::string source_image;
};

struct TaskCounts {
    int requested = 0;
    int generated = 0;
    int skipped = 0;
};

struct Manifest {
    std::uint64_t seed = 0;
    int image_count = 0;
    std::string difficulty;
    std::map<std::string, TaskCounts> per_task;
    int record_count = 0;
    std::string tool_version = kToolVersion;
};

struct GenerateOptions {
    std::filesystem::path image_dir;
    std::filesystem::path out_dir;
    std::vector<TaskKind> tasks = all_tasks();
    int per_task = 0;
    DifficultySetting difficulty = DifficultySetting::Mixed;
    std::uint64_t seed = 0;
    bool embed = false;
    int workers = 1;
};

/// Stable per-sample stream: a 64-bit hash of (global seed, task, image
/// index, sample index, retry), independent of worker count and scheduling.
RandomSource derive_seed(std::uint64_t global_seed, TaskKind task, int image_index,
                         int sample_index, int retry = 0);

/// Synthesise a dataset: per_task records per selected task, source images
/// cycled in sorted-name order, candidate pools drawn from the other images
/// via the derived stream. Writes out_dir/data.jsonl (records in (task,
/// image_index, sample_index) order), out_dir/images/*.png, and
/// out_dir/manifest.json last. Output bytes are a pure function of the
/// inputs and seed; the worker count never changes them. A sample whose
/// constraint sampling fails is retried with the next derived sub-seed up to
/// 8 times, then skipped and counted in the manifest.
Manifest generate_dataset(const GenerateOptions& options);

/// Parse and validate a data.jsonl file. Malformed lines raise SchemaError
/// naming the line number and field.
std::vector<DatasetRecord> read_records(const std::filesystem::path& path);

/// Recompute the canonical answer from a record's params (inverse
/// permutation, stored slot, angle) and compare with the stored answer.
bool reverify_answer(const DatasetRecord& record);

std::string base64_encode(const std::uint8_t* data, std::size_t size);

}  // namespace sslforge
