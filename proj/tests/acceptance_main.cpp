// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the binary exits non-zero if any criterion fails.
//
// usage: sslforge_acceptance <path-to-sslforge-cli> <work-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sslforge/errors.hpp"
#include "sslforge/evalharness.hpp"
#include "sslforge/grpo.hpp"
#include "sslforge/image_io.hpp"
#include "sslforge/pipeline.hpp"
#include "sslforge/prompts.hpp"
#include "sslforge/rewards.hpp"

namespace fs = std::filesystem;
using namespace sslforge;

namespace {

struct CheckFailure {
    std::string message;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw CheckFailure{message};
}

std::string cli_path;
fs::path work_dir;

ImageBuffer noise_image(int width, int height, std::uint64_t seed) {
    ImageBuffer img = ImageBuffer::blank(width, height);
    RandomSource rng(seed);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            std::uint8_t* p = img.pixel(x, y);
            p[0] = static_cast<std::uint8_t>((x * 255) / std::max(1, width - 1));
            p[1] = static_cast<std::uint8_t>((y * 255) / std::max(1, height - 1));
            p[2] = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
        }
    }
    return img;
}

fs::path make_corpus(const std::string& name, int count, int size) {
    const fs::path dir = work_dir / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (int i = 0; i < count; ++i) {
        char file[32];
        std::snprintf(file, sizeof(file), "img_%04d.png", i);
        save_image(noise_image(size, size, 40000 + static_cast<std::uint64_t>(i)), dir / file);
    }
    return dir;
}

void run_cli(const std::string& args) {
    const std::string cmd = cli_path + " " + args + " > /dev/null";
    const int rc = std::system(cmd.c_str());
    expect(rc == 0, "CLI command failed (" + std::to_string(rc) + "): " + args);
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    expect(static_cast<bool>(in), "cannot read " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void expect_trees_equal(const fs::path& a, const fs::path& b) {
    const auto listing = [](const fs::path& root) {
        std::vector<fs::path> rel;
        for (const auto& entry : fs::recursive_directory_iterator(root)) {
            if (entry.is_regular_file()) rel.push_back(fs::relative(entry.path(), root));
        }
        std::sort(rel.begin(), rel.end());
        return rel;
    };
    const auto la = listing(a);
    const auto lb = listing(b);
    expect(la == lb, "output trees list different files: " + a.string() + " vs " + b.string());
    for (const fs::path& rel : la) {
        expect(read_file(a / rel) == read_file(b / rel),
               "file differs between runs: " + rel.string());
    }
}

double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

// --------------------------------------------------------------------------
// 1. Random-baseline table reproduction
// --------------------------------------------------------------------------
void criterion_baselines() {
    const auto start = std::chrono::steady_clock::now();

    const DifficultyProfile easy = DifficultyProfile::easy();
    const DifficultyProfile hard = DifficultyProfile::hard();
    const struct {
        TaskKind kind;
        DifficultyProfile profile;
        double table_percent;  // the published Random row, 2 decimals
    } rows[] = {
        {TaskKind::Correspondence, easy, 4.17},
        {TaskKind::Correspondence, hard, 0.14},
        {TaskKind::Ordering, easy, 4.17},
        {TaskKind::Rotation, easy, 25.00},
        {TaskKind::Rotation, hard, 12.50},
        {TaskKind::Similarity, easy, 25.00},
        {TaskKind::Similarity, hard, 25.00},
        {TaskKind::Inpainting, easy, 25.00},
        {TaskKind::Inpainting, hard, 25.00},
    };
    for (const auto& row : rows) {
        const double analytic = random_baseline(row.kind, row.profile) * 100.0;
        const double rounded = std::round(analytic * 100.0) / 100.0;
        expect(std::abs(rounded - row.table_percent) < 1e-9,
               std::string(to_string(row.kind)) + " analytic baseline " +
                   std::to_string(rounded) + " != " + std::to_string(row.table_percent));
    }
    // Ordering 3x3 shows as 0.00 in the table; assert the analytic value is
    // at most 0.005%.
    expect(random_baseline(TaskKind::Ordering, hard) * 100.0 <= 0.005,
           "ordering 3x3 baseline above 0.005%");

    // Monte-Carlo agreement at 100k trials, 3 binomial sigma.
    const int trials = 100000;
    RandomSource rng(20240008);
    for (TaskKind kind : all_tasks()) {
        for (const DifficultyProfile& profile : {easy, hard}) {
            const double p = random_baseline(kind, profile);
            const double mc = monte_carlo_baseline(kind, profile, trials, rng);
            const double tolerance = 3.0 * binomial_sigma(p, trials);
            expect(std::abs(mc - p) <= tolerance,
                   std::string(to_string(kind)) + "/" + difficulty_label(kind, profile) +
                       " Monte-Carlo " + std::to_string(mc) + " vs analytic " +
                       std::to_string(p));
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 120.0, "criterion took " + std::to_string(seconds) + "s (budget 120s)");
}

// --------------------------------------------------------------------------
// 2. Graded-reward expectation by brute force
// --------------------------------------------------------------------------
void criterion_graded_expectation() {
    for (int n : {3, 4}) {
        std::vector<int> truth(static_cast<std::size_t>(n));
        std::iota(truth.begin(), truth.end(), 1);
        std::vector<int> pred = truth;
        long long fixed_total = 0;
        long long exact_total = 0;
        long long perms = 0;
        do {
            const double acc =
                accuracy_reward(TaskKind::Ordering, AnswerValue{pred}, AnswerValue{truth});
            fixed_total += std::llround(acc * n);
            exact_total +=
                exact_match(TaskKind::Ordering, AnswerValue{pred}, AnswerValue{truth}) ? 1 : 0;
            ++perms;
        } while (std::next_permutation(pred.begin(), pred.end()));

        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        expect(perms == fact, "enumeration miscounted the symmetric group");
        // Sum of fixed points over S_n is n!, so the mean fraction is 1/n.
        expect(fixed_total == fact, "mean fixed-point fraction is not exactly 1/" +
                                        std::to_string(n));
        expect(exact_total == 1,
               "exact-match fraction is not exactly 1/" + std::to_string(fact));
    }
}

// --------------------------------------------------------------------------
// 3. GRPO advantage normalisation
// --------------------------------------------------------------------------
void criterion_grpo() {
    RandomSource rng(33001);
    for (int g = 0; g < 1000; ++g) {
        RewardGroup group;
        for (int i = 0; i < 16; ++i) group.rewards.push_back(rng.uniform_real(0.0, 1.2));
        const AdvantageVector adv = group_advantages(group);
        expect(adv.stddev >= kDegenerateStd, "random group unexpectedly degenerate");

        double sum = 0.0, sq = 0.0;
        for (double a : adv.advantages) {
            sum += a;
            sq += a * a;
        }
        expect(std::abs(sum) <= 1e-9, "advantage sum off zero: " + std::to_string(sum));
        expect(std::abs(std::sqrt(sq / 16.0) - 1.0) <= 1e-9, "population std of advantages != 1");

        // Affine invariance: r -> c*r + b with c > 0.
        RewardGroup affine;
        for (double r : group.rewards) affine.rewards.push_back(2.5 * r + 0.3);
        const AdvantageVector adv2 = group_advantages(affine);
        for (std::size_t i = 0; i < 16; ++i) {
            expect(std::abs(adv.advantages[i] - adv2.advantages[i]) <= 1e-9,
                   "advantages not affine-invariant");
        }
    }
    const AdvantageVector constant = group_advantages({{0.7, 0.7, 0.7, 0.7}});
    for (double a : constant.advantages) {
        expect(a == 0.0, "constant group advantage not zero");
    }
}

// --------------------------------------------------------------------------
// 4. Format-reward conformance table
// --------------------------------------------------------------------------
void criterion_format_table() {
    const struct {
        const char* text;
        double reward;
        std::optional<FormatViolation> violation;
    } cases[] = {
        {"<think>the image is rotated</think> \\boxed{90}", 0.2, std::nullopt},
        {"\\boxed{90}", 0.0, FormatViolation::MissingThink},
        {"<think>a</think><think>b</think> \\boxed{A}", 0.0, FormatViolation::DuplicateTag},
        {"\\boxed{A} <think>post-hoc</think>", 0.0, FormatViolation::OrderViolation},
        {"<think>x</think> the answer is 90", 0.0, FormatViolation::MissingBoxed},
        {"<think>x</think> \\boxed{\\frac{1}{2}}", 0.2, std::nullopt},
        {"", 0.0, FormatViolation::MissingThink},
        {"  <think> padded reasoning </think>   \\boxed{ 270 }  ", 0.2, std::nullopt},
        {"<think>x</think> \\boxed{90", 0.0, FormatViolation::UnbalancedBraces},
        {"</think>late open<think> \\boxed{A}", 0.0, FormatViolation::OrderViolation},
    };
    int index = 0;
    for (const auto& c : cases) {
        ++index;
        const ParsedResponse parsed = parse_response(c.text);
        expect(format_reward(c.text) == c.reward,
               "case " + std::to_string(index) + ": format reward mismatch");
        expect(parsed.violation == c.violation,
               "case " + std::to_string(index) + ": violation tag mismatch");
        expect(parsed.format_ok == !c.violation.has_value(),
               "case " + std::to_string(index) + ": format_ok inconsistent");
    }
    // Whitespace inside the boxed span still grades correctly.
    const RewardBreakdown r = total_reward(
        TaskKind::Rotation, "  <think> padded reasoning </think>   \\boxed{ 270 }  ",
        Angle{270});
    expect(r.total == 1.2, "whitespace variant did not grade to 1.2");
}

// --------------------------------------------------------------------------
// 5. Geometry constraints at 448x448
// --------------------------------------------------------------------------
void criterion_geometry() {
    const ImageBuffer canvas = noise_image(448, 448, 50001);
    std::vector<ImageBuffer> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(noise_image(448, 448, 50010 + i));

    for (double alpha : {0.25, 0.5}) {
        for (int i = 0; i < 1000; ++i) {
            RandomSource rng(60000 + static_cast<std::uint64_t>(i) +
                             static_cast<std::uint64_t>(alpha * 1000) * 100000);
            const TaskSample s = gen_inpainting(canvas, alpha, pool, rng);
            const auto& params = std::get<InpaintingParams>(s.params);
            const Region& r = params.region;
            expect(r.w >= 28 && r.h >= 28, "mask edge below 28 px");
            expect(r.x0 >= 0 && r.y0 >= 0 && r.x0 + r.w <= 448 && r.y0 + r.h <= 448,
                   "mask region out of bounds");
            const double target = alpha * 448.0 * 448.0;
            expect(std::abs(r.w * r.h - target) / target <= 0.02,
                   "mask area error above 2%");
        }
    }

    for (int k : {4, 6}) {
        for (int i = 0; i < 1000; ++i) {
            RandomSource rng(70000 + static_cast<std::uint64_t>(k) * 100000 +
                             static_cast<std::uint64_t>(i));
            const TaskSample s = gen_correspondence(canvas, k, rng);
            const auto& params = std::get<CorrespondenceParams>(s.params);
            const auto& answer = std::get<std::vector<int>>(s.answer);
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    const double dx = params.points[a].x - params.points[b].x;
                    const double dy = params.points[a].y - params.points[b].y;
                    expect(std::sqrt(dx * dx + dy * dy) >= 40.0,
                           "points closer than 40 px");
                }
            }
            for (int idx = 0; idx < k; ++idx) {
                const Point2D mapped = params.map.apply(params.points[idx]);
                const int label = answer[idx];
                const Point2D labelled = params.transformed_points[static_cast<std::size_t>(
                    params.perm.forward[static_cast<std::size_t>(label) - 1]) - 1];
                const double err = std::hypot(mapped.x - labelled.x, mapped.y - labelled.y);
                expect(err <= 0.5, "mapped point misses its label by " + std::to_string(err));
            }
        }
    }
}

// --------------------------------------------------------------------------
// 6. Structural round trips
// --------------------------------------------------------------------------
void criterion_round_trips() {
    // Ordering reconstruction, pixel-exact (divisible dimensions).
    const ImageBuffer img = noise_image(216, 216, 80001);
    for (const auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        RandomSource rng(81000 + static_cast<std::uint64_t>(m));
        const TaskSample s = gen_ordering(img, m, n, rng);
        const auto& answer = std::get<std::vector<int>>(s.answer);
        std::vector<ImageBuffer> restored;
        for (int j = 0; j < m * n; ++j) {
            restored.push_back(s.images[static_cast<std::size_t>(answer[j]) - 1].image);
        }
        expect(assemble_grid(restored, m, n) == img,
               "ordering reconstruction not pixel-exact");
    }

    // Inpainting paste-back, pixel-exact.
    std::vector<ImageBuffer> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(noise_image(220, 220, 82000 + i));
    for (int i = 0; i < 20; ++i) {
        RandomSource rng(83000 + static_cast<std::uint64_t>(i));
        const TaskSample s = gen_inpainting(img, 0.5, pool, rng);
        const auto& params = std::get<InpaintingParams>(s.params);
        ImageBuffer healed = s.images[0].image;
        paste_region(healed, s.images[static_cast<std::size_t>(params.correct_slot) + 1].image,
                     params.region.x0, params.region.y0);
        expect(healed == img, "inpainting paste-back not pixel-exact");
    }

    // Four quarter turns are the identity.
    ImageBuffer turned = img;
    for (int i = 0; i < 4; ++i) turned = rotate_cw(turned, 90);
    expect(turned == img, "four 90-degree rotations are not the identity");

    // parse_answer(canonical_answer(x)) over 10k random answers.
    RandomSource rng(84001);
    for (int i = 0; i < 10000; ++i) {
        AnswerValue truth;
        TaskKind kind = TaskKind::Rotation;
        switch (rng.uniform_int(0, 2)) {
            case 0: {
                const int s = rng.bernoulli(0.5) ? 4 : 8;
                truth = Angle{(360 / s) * rng.uniform_int(0, s - 1)};
                break;
            }
            case 1:
                kind = rng.bernoulli(0.5) ? TaskKind::Similarity : TaskKind::Inpainting;
                truth = Choice{rng.uniform_int(0, 3)};
                break;
            default:
                kind = rng.bernoulli(0.5) ? TaskKind::Ordering : TaskKind::Correspondence;
                truth = sample_permutation(rng.uniform_int(1, 12), rng).forward;
                break;
        }
        const auto parsed = parse_answer(kind, canonical_answer(truth));
        expect(parsed.has_value() && *parsed == truth,
               "canonical answer failed to round-trip");
    }
}

// --------------------------------------------------------------------------
// 7. Byte-level determinism through the CLI
// --------------------------------------------------------------------------
void criterion_determinism() {
    const fs::path corpus = make_corpus("det_corpus", 6, 180);
    const fs::path out_a = work_dir / "det_a";
    const fs::path out_b = work_dir / "det_b";
    const fs::path out_c = work_dir / "det_c";
    for (const fs::path& p : {out_a, out_b, out_c}) fs::remove_all(p);

    const std::string common = "generate --images " + corpus.string() +
                               " --per-task 8 --difficulty mixed --seed 7 ";
    run_cli(common + "--workers 1 --out " + out_a.string());
    run_cli(common + "--workers 1 --out " + out_b.string());
    run_cli(common + "--workers 8 --out " + out_c.string());

    expect_trees_equal(out_a, out_b);  // same seed, same bytes
    expect_trees_equal(out_a, out_c);  // worker count never changes bytes
}

// --------------------------------------------------------------------------
// 8. Balance and the 118K -> 591K shape at 1:118 scale
// --------------------------------------------------------------------------
void criterion_scale_shape() {
    // Equal proportion: five tasks, 200 records each.
    const fs::path small_corpus = make_corpus("balance_corpus", 8, 192);
    const fs::path balance_out = work_dir / "balance_out";
    fs::remove_all(balance_out);
    run_cli("generate --images " + small_corpus.string() + " --per-task 200 " +
            "--difficulty mixed --seed 11 --workers 8 --out " + balance_out.string());
    {
        const auto records = read_records(balance_out / "data.jsonl");
        expect(records.size() == 1000, "expected 1000 records, got " +
                                           std::to_string(records.size()));
        std::map<std::string, int> per_task;
        for (const auto& rec : records) per_task[rec.task]++;
        expect(per_task.size() == 5, "expected five tasks in the balanced run");
        for (const auto& [task, count] : per_task) {
            expect(count == 200, task + " generated " + std::to_string(count) + " != 200");
        }
    }

    // Scale shape: 1000 images, 1 sample per (image, task), under 5 minutes.
    const auto start = std::chrono::steady_clock::now();
    const fs::path corpus = make_corpus("scale_corpus", 1000, 160);
    const fs::path out = work_dir / "scale_out";
    fs::remove_all(out);
    run_cli("generate --images " + corpus.string() + " --per-task 1000 " +
            "--difficulty mixed --seed 2024 --workers 8 --out " + out.string());

    const auto records = read_records(out / "data.jsonl");
    expect(records.size() == 5000,
           "expected 5000 records, got " + std::to_string(records.size()));
    std::map<std::string, std::set<int>> image_indices;
    for (const auto& rec : records) {
        const std::size_t dash1 = rec.id.find('-');
        const std::size_t dash2 = rec.id.rfind('-');
        expect(rec.id.substr(dash2 + 1) == "0", "more than one sample per (image, task)");
        image_indices[rec.task].insert(std::stoi(rec.id.substr(dash1 + 1, dash2 - dash1 - 1)));
    }
    for (const auto& [task, indices] : image_indices) {
        expect(indices.size() == 1000, task + " does not cover all 1000 images");
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 300.0,
           "scale run took " + std::to_string(seconds) + "s (budget 300s)");
}

// --------------------------------------------------------------------------
// 9. Oracle and random-answerer scoring through the CLI
// --------------------------------------------------------------------------
void criterion_oracle_scoring() {
    const fs::path dataset = work_dir / "scale_out" / "data.jsonl";
    expect(fs::exists(dataset), "criterion 8 dataset missing");
    const auto records = read_records(dataset);

    // Oracle responses: ground truth wrapped in a well-formed template.
    const fs::path oracle_resp = work_dir / "oracle_resp.jsonl";
    {
        std::ofstream out(oracle_resp);
        for (const auto& rec : records) {
            nlohmann::json j;
            j["id"] = rec.id;
            j["response"] = "<think>read off the construction</think> \\boxed{" +
                            rec.answer + "}";
            out << j.dump() << '\n';
        }
    }
    const fs::path oracle_dump = work_dir / "oracle_rewards.jsonl";
    run_cli("score --dataset " + dataset.string() + " --responses " + oracle_resp.string() +
            " --report " + (work_dir / "oracle_report.md").string() + " --dump " +
            oracle_dump.string());
    {
        std::ifstream in(oracle_dump);
        std::string line;
        int count = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            expect(j["exact"].get<bool>(), "oracle response not an exact match: " +
                                               j["id"].get<std::string>());
            expect(std::abs(j["total"].get<double>() - 1.2) < 1e-12,
                   "oracle total reward != 1.2");
            ++count;
        }
        expect(count == 5000, "oracle dump incomplete");
    }

    // Uniform random answerer: per-record uniform draw over the answer space.
    const fs::path random_resp = work_dir / "random_resp.jsonl";
    {
        std::ofstream out(random_resp);
        for (const auto& rec : records) {
            const auto kind = task_from_string(rec.task);
            const auto profile = profile_from_label(*kind, rec.difficulty);
            expect(profile.has_value(), "unknown difficulty label " + rec.difficulty);
            RandomSource rng(fnv1a64(rec.id.data(), rec.id.size()) ^ 0x517cc1b727220a95ULL);
            const AnswerValue guess = random_answer(*kind, *profile, rng);
            nlohmann::json j;
            j["id"] = rec.id;
            j["response"] =
                "<think>uniform guess</think> \\boxed{" + canonical_answer(guess) + "}";
            out << j.dump() << '\n';
        }
    }
    const fs::path random_dump = work_dir / "random_rewards.jsonl";
    run_cli("score --dataset " + dataset.string() + " --responses " + random_resp.string() +
            " --report " + (work_dir / "random_report.md").string() + " --dump " +
            random_dump.string());

    std::map<std::string, bool> exact_by_id;
    {
        std::ifstream in(random_dump);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            exact_by_id[j["id"].get<std::string>()] = j["exact"].get<bool>();
        }
    }
    struct SliceStats {
        int n = 0;
        int hits = 0;
    };
    std::map<std::pair<std::string, std::string>, SliceStats> slices;
    for (const auto& rec : records) {
        SliceStats& s = slices[{rec.task, rec.difficulty}];
        ++s.n;
        if (exact_by_id.at(rec.id)) ++s.hits;
    }
    expect(slices.size() == 10, "expected 10 (task, difficulty) slices");
    for (const auto& [key, stats] : slices) {
        const auto kind = task_from_string(key.first);
        const double p = random_baseline(*kind, *profile_from_label(*kind, key.second));
        const double observed = static_cast<double>(stats.hits) / stats.n;
        const double tolerance = 3.0 * binomial_sigma(p, stats.n);
        expect(std::abs(observed - p) <= tolerance,
               key.first + "/" + key.second + " random answerer " +
                   std::to_string(observed) + " vs baseline " + std::to_string(p) +
                   " (n=" + std::to_string(stats.n) + ")");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <sslforge-cli> <work-dir>\n", argv[0]);
        return 2;
    }
    cli_path = argv[1];
    work_dir = argv[2];
    fs::create_directories(work_dir);

    const struct {
        const char* name;
        std::function<void()> body;
    } criteria[] = {
        {"random-baseline table reproduction", criterion_baselines},
        {"graded-reward expectation (brute force)", criterion_graded_expectation},
        {"GRPO advantage normalisation", criterion_grpo},
        {"format-reward conformance table", criterion_format_table},
        {"geometry constraints at 448x448", criterion_geometry},
        {"structural round trips", criterion_round_trips},
        {"byte-level determinism via the CLI", criterion_determinism},
        {"balance and scale shape", criterion_scale_shape},
        {"oracle and random-answerer scoring via the CLI", criterion_oracle_scoring},
    };

    int failures = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body();
            const double s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
            std::printf("[PASS] %d. %s (%.1fs)\n", index, criterion.name, s);
        } catch (const CheckFailure& f) {
            std::printf("[FAIL] %d. %s: %s\n", index, criterion.name, f.message.c_str());
            ++failures;
        } catch (const std::exception& e) {
            std::printf("[FAIL] %d. %s: unexpected error: %s\n", index, criterion.name,
                        e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %d criteria failed\n", failures, index);
        return 1;
    }
    std::printf("all %d criteria passed\n", index);
    return 0;
}
