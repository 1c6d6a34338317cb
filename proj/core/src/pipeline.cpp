// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "sslforge/errors.hpp"
#include "sslforge/image_io.hpp"
#include "sslforge/prompts.hpp"
#include "sslforge/rewards.hpp"

namespace sslforge {

using nlohmann::json;

namespace {

constexpr int kMaxRetries = 8;

bool has_image_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw IoError("image directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_image_extension(entry.path())) {
            paths.push_back(entry.path());
        }
    }
    // Directory iteration order is platform-defined; sort for stability.
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return paths;
}

/// Thread-safe memoised loader with a crude FIFO cap so huge corpora do not
/// pin every decoded image in memory.
class ImageCache {
public:
    explicit ImageCache(std::vector<std::filesystem::path> paths)
        : paths_(std::move(paths)) {}

    std::shared_ptr<const ImageBuffer> get(int index) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(index); it != cache_.end()) return it->second;
        }
        auto img = std::make_shared<ImageBuffer>(
            load_image(paths_[static_cast<std::size_t>(index)]));
        std::lock_guard lock(mutex_);
        auto [it, inserted] = cache_.emplace(index, std::move(img));
        if (inserted) {
            order_.push_back(index);
            if (order_.size() > kCapacity) {
                cache_.erase(order_.front());
                order_.erase(order_.begin());
            }
        }
        return it->second;
    }

    int size() const { return static_cast<int>(paths_.size()); }
    const std::filesystem::path& path(int index) const {
        return paths_[static_cast<std::size_t>(index)];
    }

private:
    static constexpr std::size_t kCapacity = 256;
    std::vector<std::filesystem::path> paths_;
    std::map<int, std::shared_ptr<const ImageBuffer>> cache_;
    std::vector<int> order_;
    std::mutex mutex_;
};

struct Job {
    TaskKind kind;
    int image_index = 0;
    int sample_index = 0;
};

json params_to_json(const TaskParams& params) {
    json j;
    if (const auto* p = std::get_if<RotationParams>(&params)) {
        j["s"] = p->s;
        j["angle"] = p->angle;
    } else if (const auto* p = std::get_if<SimilarityParams>(&params)) {
        j["strength"] = to_string(p->strength);
        j["positive_slot"] = p->positive_slot;
        j["negative_pool_indices"] = p->negative_pool_indices;
    } else if (const auto* p = std::get_if<InpaintingParams>(&params)) {
        j["alpha"] = p->alpha;
        j["region"] = {{"x0", p->region.x0}, {"y0", p->region.y0},
                       {"w", p->region.w},   {"h", p->region.h}};
        j["correct_slot"] = p->correct_slot;
        j["distractor_pool_indices"] = p->distractor_pool_indices;
    } else if (const auto* p = std::get_if<OrderingParams>(&params)) {
        j["rows"] = p->rows;
        j["cols"] = p->cols;
        j["permutation"] = p->perm.forward;
    } else if (const auto* p = std::get_if<CorrespondenceParams>(&params)) {
        j["k"] = p->k;
        j["affine"] = {p->map.a, p->map.b, p->map.c, p->map.d, p->map.e, p->map.f};
        json pts = json::array();
        for (const Point2D& pt : p->points) pts.push_back({pt.x, pt.y});
        j["points"] = pts;
        json tpts = json::array();
        for (const Point2D& pt : p->transformed_points) tpts.push_back({pt.x, pt.y});
        j["transformed_points"] = tpts;
        j["permutation"] = p->perm.forward;
    }
    return j;
}

/// True for failures worth retrying with a fresh sub-seed; I/O problems and
/// programming errors propagate.
bool is_retryable(const Error& e) {
    return dynamic_cast<const SamplingExhausted*>(&e) != nullptr ||
           dynamic_cast<const InfeasibleMask*>(&e) != nullptr ||
           dynamic_cast<const ImageTooSmall*>(&e) != nullptr;
}

std::string field_error(const std::filesystem::path& path, std::size_t line,
                        const std::string& detail) {
    return path.filename().string() + ":" + std::to_string(line) + ": " + detail;
}

const json& require_field(const json& j, const char* key,
                          const std::filesystem::path& path, std::size_t line) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(field_error(path, line, std::string("missing field \"") + key + "\""));
    }
    return *it;
}

}  // namespace

const char* to_string(DifficultySetting d) {
    switch (d) {
        case DifficultySetting::Easy: return "easy";
        case DifficultySetting::Hard: return "hard";
        case DifficultySetting::Mixed: return "mixed";
    }
    return "?";
}

std::optional<DifficultySetting> difficulty_from_string(std::string_view name) {
    if (name == "easy") return DifficultySetting::Easy;
    if (name == "hard") return DifficultySetting::Hard;
    if (name == "mixed") return DifficultySetting::Mixed;
    return std::nullopt;
}

RandomSource derive_seed(std::uint64_t global_seed, TaskKind task, int image_index,
                         int sample_index, int retry) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(global_seed >> (8 * i));
    std::uint64_t h = fnv1a64(buf, sizeof(buf));
    const char* name = to_string(task);
    h = fnv1a64(name, std::strlen(name), h);
    const std::uint64_t tail[3] = {static_cast<std::uint64_t>(image_index),
                                   static_cast<std::uint64_t>(sample_index),
                                   static_cast<std::uint64_t>(retry)};
    for (std::uint64_t v : tail) {
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
        h = fnv1a64(buf, sizeof(buf), h);
    }
    return RandomSource(mix64(h));
}

std::string base64_encode(const std::uint8_t* data, std::size_t size) {
    static const char* alphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((size + 2) / 3 * 4);
    for (std::size_t i = 0; i < size; i += 3) {
        const std::uint32_t b0 = data[i];
        const std::uint32_t b1 = i + 1 < size ? data[i + 1] : 0;
        const std::uint32_t b2 = i + 2 < size ? data[i + 2] : 0;
        const std::uint32_t triple = (b0 << 16) | (b1 << 8) | b2;
        out += alphabet[(triple >> 18) & 0x3F];
        out += alphabet[(triple >> 12) & 0x3F];
        out += i + 1 < size ? alphabet[(triple >> 6) & 0x3F] : '=';
        out += i + 2 < size ? alphabet[triple & 0x3F] : '=';
    }
    return out;
}

Manifest generate_dataset(const GenerateOptions& options) {
    if (options.per_task < 0) throw Error("per_task must be >= 0");
    if (options.tasks.empty()) throw Error("no tasks selected");

    ImageCache cache(list_images(options.image_dir));
    if (cache.size() < 4) {
        throw TooFewImages("need at least 4 decodable images, found " +
                           std::to_string(cache.size()));
    }
    const int n_images = cache.size();

    std::filesystem::create_directories(options.out_dir / "images");

    // Canonical record order: (task name, image index, sample index).
    std::vector<TaskKind> tasks = options.tasks;
    std::sort(tasks.begin(), tasks.end(), [](TaskKind a, TaskKind b) {
        return std::string_view(to_string(a)) < std::string_view(to_string(b));
    });
    tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

    std::vector<Job> jobs;
    for (TaskKind kind : tasks) {
        const int base = options.per_task / n_images;
        const int extra = options.per_task % n_images;
        for (int img = 0; img < n_images; ++img) {
            const int samples = base + (img < extra ? 1 : 0);
            for (int s = 0; s < samples; ++s) jobs.push_back({kind, img, s});
        }
    }

    std::vector<std::string> record_lines(jobs.size());
    std::vector<char> record_ok(jobs.size(), 0);
    std::atomic<std::size_t> next_job{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    const auto run_job = [&](const Job& job) {
        const std::string task_name = to_string(job.kind);
        const std::string id = task_name + "-" + std::to_string(job.image_index) + "-" +
                               std::to_string(job.sample_index);
        for (int retry = 0; retry <= kMaxRetries; ++retry) {
            RandomSource rng = derive_seed(options.seed, job.kind, job.image_index,
                                           job.sample_index, retry);
            DifficultyProfile profile;
            switch (options.difficulty) {
                case DifficultySetting::Easy:
                    profile = DifficultyProfile::easy();
                    break;
                case DifficultySetting::Hard:
                    profile = DifficultyProfile::hard();
                    break;
                case DifficultySetting::Mixed:
                    profile = rng.bernoulli(0.5) ? DifficultyProfile::hard()
                                                 : DifficultyProfile::easy();
                    break;
            }

            try {
                const std::shared_ptr<const ImageBuffer> source = cache.get(job.image_index);

                std::vector<ImageBuffer> pool;
                if (job.kind == TaskKind::Similarity || job.kind == TaskKind::Inpainting) {
                    // Three distinct donors, never the source image itself.
                    std::vector<int> chosen;
                    while (chosen.size() < 3) {
                        int idx = rng.uniform_int(0, n_images - 2);
                        if (idx >= job.image_index) ++idx;
                        if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) {
                            chosen.push_back(idx);
                        }
                    }
                    for (int idx : chosen) pool.push_back(*cache.get(idx));
                }

                TaskSample sample;
                switch (job.kind) {
                    case TaskKind::Rotation:
                        sample = gen_rotation(*source, profile.rotation_s, rng);
                        break;
                    case TaskKind::Similarity:
                        sample = gen_similarity(*source, pool, profile.aug_strength, rng);
                        break;
                    case TaskKind::Inpainting:
                        sample = gen_inpainting(*source, profile.mask_ratio, pool, rng);
                        break;
                    case TaskKind::Ordering:
                        sample = gen_ordering(*source, profile.grid_rows, profile.grid_cols, rng);
                        break;
                    case TaskKind::Correspondence:
                        sample = gen_correspondence(*source, profile.points_k, rng);
                        break;
                }
                sample.id = id;
                sample.prompt = render_prompt(sample);

                json images = json::array();
                for (const TaggedImage& tagged : sample.images) {
                    json ref;
                    ref["role"] = tagged.role;
                    if (options.embed) {
                        const std::vector<std::uint8_t> png = encode_png(tagged.image);
                        ref["data"] = base64_encode(png.data(), png.size());
                    } else {
                        const std::string rel = "images/" + id + "_" + tagged.role + ".png";
                        save_image(tagged.image, options.out_dir / rel);
                        ref["path"] = rel;
                    }
                    images.push_back(std::move(ref));
                }

                json record;
                record["id"] = id;
                record["task"] = task_name;
                record["difficulty"] = sample.difficulty;
                record["prompt"] = sample.prompt;
                record["images"] = std::move(images);
                record["answer"] = canonical_answer(sample.answer);
                record["answer_kind"] = answer_kind_name(sample.answer);
                record["params"] = params_to_json(sample.params);
                record["source_image"] = cache.path(job.image_index).filename().string();
                return record.dump();
            } catch (const Error& e) {
                if (!is_retryable(e) || retry == kMaxRetries) {
                    if (is_retryable(e)) return std::string();  // skip after retries
                    throw;
                }
            }
        }
        return std::string();
    };

    const auto worker_loop = [&] {
        for (;;) {
            const std::size_t i = next_job.fetch_add(1);
            if (i >= jobs.size()) return;
            {
                std::lock_guard lock(failure_mutex);
                if (failure) return;
            }
            try {
                std::string line = run_job(jobs[i]);
                if (!line.empty()) {
                    record_lines[i] = std::move(line);
                    record_ok[i] = 1;
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) threads.emplace_back(worker_loop);
        for (std::thread& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    Manifest manifest;
    manifest.seed = options.seed;
    manifest.image_count = n_images;
    manifest.difficulty = to_string(options.difficulty);

    std::ofstream data_out(options.out_dir / "data.jsonl", std::ios::binary);
    if (!data_out) throw IoError("cannot write data.jsonl");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        TaskCounts& counts = manifest.per_task[to_string(jobs[i].kind)];
        ++counts.requested;
        if (record_ok[i]) {
            data_out << record_lines[i] << '\n';
            ++counts.generated;
            ++manifest.record_count;
        } else {
            ++counts.skipped;
        }
    }
    for (TaskKind kind : tasks) manifest.per_task[to_string(kind)];  // ensure key exists
    data_out.close();
    if (!data_out) throw IoError("failed writing data.jsonl");

    json mani;
    mani["seed"] = manifest.seed;
    mani["image_count"] = manifest.image_count;
    mani["difficulty"] = manifest.difficulty;
    mani["record_count"] = manifest.record_count;
    mani["tool_version"] = manifest.tool_version;
    json per_task;
    for (const auto& [name, counts] : manifest.per_task) {
        per_task[name] = {{"requested", counts.requested},
                          {"generated", counts.generated},
                          {"skipped", counts.skipped}};
    }
    mani["per_task"] = std::move(per_task);
    std::ofstream mani_out(options.out_dir / "manifest.json", std::ios::binary);
    if (!mani_out) throw IoError("cannot write manifest.json");
    mani_out << mani.dump(2) << '\n';
    mani_out.close();
    if (!mani_out) throw IoError("failed writing manifest.json");

    return manifest;
}

std::vector<DatasetRecord> read_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    std::vector<DatasetRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw SchemaError(field_error(path, line_no, "not a JSON object"));
        }
        DatasetRecord rec;
        try {
            rec.id = require_field(j, "id", path, line_no).get<std::string>();
            rec.task = require_field(j, "task", path, line_no).get<std::string>();
            rec.difficulty = require_field(j, "difficulty", path, line_no).get<std::string>();
            rec.prompt = require_field(j, "prompt", path, line_no).get<std::string>();
            rec.answer = require_field(j, "answer", path, line_no).get<std::string>();
            rec.answer_kind =
                require_field(j, "answer_kind", path, line_no).get<std::string>();
            rec.source_image =
                require_field(j, "source_image", path, line_no).get<std::string>();
            rec.params_json = require_field(j, "params", path, line_no).dump();
            const json& images = require_field(j, "images", path, line_no);
            if (!images.is_array()) {
                throw SchemaError(field_error(path, line_no, "\"images\" is not an array"));
            }
            for (const json& ref : images) {
                ImageRef image_ref;
                image_ref.role = require_field(ref, "role", path, line_no).get<std::string>();
                if (ref.contains("path")) image_ref.path = ref["path"].get<std::string>();
                if (ref.contains("data")) image_ref.data_b64 = ref["data"].get<std::string>();
                if (image_ref.path.empty() && image_ref.data_b64.empty()) {
                    throw SchemaError(
                        field_error(path, line_no, "image entry lacks \"path\" and \"data\""));
                }
                rec.images.push_back(std::move(image_ref));
            }
        } catch (const json::exception& e) {
            throw SchemaError(field_error(path, line_no, e.what()));
        }
        if (!task_from_string(rec.task)) {
            throw SchemaError(field_error(path, line_no, "unknown task \"" + rec.task + "\""));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

bool reverify_answer(const DatasetRecord& record) {
    const auto kind = task_from_string(record.task);
    if (!kind) return false;
    const json params = json::parse(record.params_json, nullptr, false);
    if (params.is_discarded()) return false;

    try {
        switch (*kind) {
            case TaskKind::Rotation:
                return record.answer == std::to_string(params.at("angle").get<int>());
            case TaskKind::Similarity:
                return record.answer ==
                       canonical_answer(Choice{params.at("positive_slot").get<int>()});
            case TaskKind::Inpainting:
                return record.answer ==
                       canonical_answer(Choice{params.at("correct_slot").get<int>()});
            case TaskKind::Ordering:
            case TaskKind::Correspondence: {
                Permutation perm;
                perm.forward = params.at("permutation").get<std::vector<int>>();
                if (!perm.valid()) return false;
                return record.answer == canonical_answer(perm.inverse().forward);
            }
        }
    } catch (const json::exception&) {
        return false;
    }
    return false;
}

}  // namespace sslforge
