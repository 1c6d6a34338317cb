// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/taskgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sslforge/errors.hpp"

namespace sslforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kCandidateRoles[4] = {"candidate-A", "candidate-B", "candidate-C",
                                  "candidate-D"};

/// Draw `count` distinct indices from [0, pool_size).
std::vector<int> pick_distinct(int pool_size, int count, RandomSource& rng) {
    std::vector<int> indices(pool_size);
    std::iota(indices.begin(), indices.end(), 0);
    for (int i = 0; i < count; ++i) {
        std::swap(indices[i], indices[rng.uniform_int(i, pool_size - 1)]);
    }
    indices.resize(count);
    return indices;
}

}  // namespace

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

const char* to_string(TaskKind kind) {
    switch (kind) {
        case TaskKind::Rotation: return "rotation";
        case TaskKind::Similarity: return "similarity";
        case TaskKind::Inpainting: return "inpainting";
        case TaskKind::Ordering: return "ordering";
        case TaskKind::Correspondence: return "correspondence";
    }
    return "unknown";
}

std::optional<TaskKind> task_from_string(std::string_view name) {
    for (TaskKind kind : all_tasks()) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

std::vector<TaskKind> all_tasks() {
    return {TaskKind::Rotation, TaskKind::Similarity, TaskKind::Inpainting,
            TaskKind::Ordering, TaskKind::Correspondence};
}

bool is_single_value_task(TaskKind kind) {
    return kind == TaskKind::Rotation || kind == TaskKind::Similarity ||
           kind == TaskKind::Inpainting;
}

DifficultyProfile DifficultyProfile::easy() {
    return {.rotation_s = 4,
            .mask_ratio = 0.25,
            .grid_rows = 2,
            .grid_cols = 2,
            .points_k = 4,
            .aug_strength = AugStrength::Weak};
}

DifficultyProfile DifficultyProfile::hard() {
    return {.rotation_s = 8,
            .mask_ratio = 0.5,
            .grid_rows = 3,
            .grid_cols = 3,
            .points_k = 6,
            .aug_strength = AugStrength::Strong};
}

DifficultyProfile DifficultyProfile::at(DifficultyLevel level) {
    return level == DifficultyLevel::Easy ? easy() : hard();
}

std::string difficulty_label(TaskKind kind, const DifficultyProfile& p) {
    switch (kind) {
        case TaskKind::Rotation:
            return "s" + std::to_string(p.rotation_s);
        case TaskKind::Similarity:
            return to_string(p.aug_strength);
        case TaskKind::Inpainting:
            return "a" + std::to_string(static_cast<int>(std::lround(p.mask_ratio * 100)));
        case TaskKind::Ordering:
            return std::to_string(p.grid_rows) + "x" + std::to_string(p.grid_cols);
        case TaskKind::Correspondence:
            return "k" + std::to_string(p.points_k);
    }
    return "?";
}

std::optional<DifficultyProfile> profile_from_label(TaskKind kind, std::string_view label) {
    for (DifficultyLevel level : {DifficultyLevel::Easy, DifficultyLevel::Hard}) {
        DifficultyProfile p = DifficultyProfile::at(level);
        if (difficulty_label(kind, p) == label) return p;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Answers
// ---------------------------------------------------------------------------

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.forward.assign(forward.size(), 0);
    for (std::size_t i = 0; i < forward.size(); ++i) {
        inv.forward[static_cast<std::size_t>(forward[i]) - 1] = static_cast<int>(i) + 1;
    }
    return inv;
}

bool Permutation::valid() const {
    std::vector<bool> seen(forward.size(), false);
    for (int v : forward) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v) - 1]) return false;
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    return !forward.empty();
}

AnswerValue answer_from_permutation(const Permutation& p) {
    if (!p.valid()) throw Error("invalid permutation used as ground truth");
    return p.forward;
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

Region sample_mask_region(int img_height, int img_width, double alpha, RandomSource& rng) {
    constexpr int kMinEdge = 28;
    if (img_height < kMinEdge || img_width < kMinEdge) {
        throw InfeasibleMask("image smaller than the 28 px mask floor");
    }
    const double target_area = alpha * img_height * img_width;
    if (target_area < kMinEdge * kMinEdge) {
        throw InfeasibleMask("target mask area below 28x28");
    }
    const int h_lo = std::max(kMinEdge, static_cast<int>(std::ceil(target_area / img_width)));
    const int h_hi = std::min(img_height, static_cast<int>(std::floor(target_area / kMinEdge)));
    if (h_lo > h_hi) throw InfeasibleMask("no mask height satisfies the area constraint");

    const int h = rng.uniform_int(h_lo, h_hi);
    const int w = std::clamp(static_cast<int>(std::lround(target_area / h)), kMinEdge,
                             img_width);
    const int x0 = rng.uniform_int(0, img_width - w);
    const int y0 = rng.uniform_int(0, img_height - h);
    return {x0, y0, w, h};
}

Permutation sample_permutation(int n, RandomSource& rng) {
    if (n < 1) throw Error("permutation length must be >= 1");
    Permutation p;
    p.forward.resize(static_cast<std::size_t>(n));
    std::iota(p.forward.begin(), p.forward.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::swap(p.forward[static_cast<std::size_t>(i)],
                  p.forward[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    }
    return p;
}

std::vector<Point2D> sample_separated_points(int img_height, int img_width, int k,
                                             double min_dist, RandomSource& rng) {
    const double margin = kPointBorderMargin;
    const double x_hi = img_width - 1 - margin;
    const double y_hi = img_height - 1 - margin;
    if (k < 1 || x_hi < margin || y_hi < margin) {
        throw SamplingExhausted("image cannot host annotated points");
    }
    std::vector<Point2D> points;
    points.reserve(static_cast<std::size_t>(k));
    const double min_dist_sq = min_dist * min_dist;
    for (int attempts = 0; static_cast<int>(points.size()) < k; ++attempts) {
        if (attempts >= 10000) {
            throw SamplingExhausted("could not place " + std::to_string(k) +
                                    " points with " + std::to_string(min_dist) +
                                    " px separation");
        }
        const Point2D cand{rng.uniform_real(margin, x_hi), rng.uniform_real(margin, y_hi)};
        const bool clear = std::none_of(points.begin(), points.end(), [&](const Point2D& p) {
            const double dx = p.x - cand.x;
            const double dy = p.y - cand.y;
            return dx * dx + dy * dy < min_dist_sq;
        });
        if (clear) points.push_back(cand);
    }
    return points;
}

AffineMap sample_affine(int img_height, int img_width, const std::vector<Point2D>& points,
                        RandomSource& rng, const AffineRanges& ranges) {
    const double cx = (img_width - 1) / 2.0;
    const double cy = (img_height - 1) / 2.0;
    const double margin = kPointBorderMargin;

    AffineRanges r = ranges;
    for (int level = 0; level < 20; ++level) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            const double theta = rng.uniform_real(-r.rotation_deg, r.rotation_deg) * kPi / 180.0;
            const double scale = rng.uniform_real(1.0 - r.scale_dev, 1.0 + r.scale_dev);
            const double shear = rng.uniform_real(-r.shear_deg, r.shear_deg) * kPi / 180.0;
            const double tx = rng.uniform_real(-r.translate_frac, r.translate_frac) * img_width;
            const double ty = rng.uniform_real(-r.translate_frac, r.translate_frac) * img_height;

            const double cs = std::cos(theta);
            const double sn = std::sin(theta);
            const double sh = std::tan(shear);
            // rotate(theta) * shear(x by sh) * scale, about (cx, cy), then translate.
            AffineMap m;
            m.a = scale * cs;
            m.b = scale * (cs * sh - sn);
            m.d = scale * sn;
            m.e = scale * (sn * sh + cs);
            m.c = cx + tx - (m.a * cx + m.b * cy);
            m.f = cy + ty - (m.d * cx + m.e * cy);

            const bool ok = std::all_of(points.begin(), points.end(), [&](const Point2D& p) {
                const Point2D q = m.apply(p);
                return q.x >= margin && q.x <= img_width - 1 - margin && q.y >= margin &&
                       q.y <= img_height - 1 - margin;
            });
            if (ok) return m;
        }
        r.rotation_deg /= 2.0;
        r.scale_dev /= 2.0;
        r.shear_deg /= 2.0;
        r.translate_frac /= 2.0;
    }
    throw SamplingExhausted("no affine map keeps all points in bounds");
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

TaskSample gen_rotation(const ImageBuffer& img, int s, RandomSource& rng) {
    if (s != 4 && s != 8) throw Error("rotation angle set size must be 4 or 8");
    const int step = 360 / s;
    const int angle = step * rng.uniform_int(0, s - 1);

    TaskSample sample;
    sample.kind = TaskKind::Rotation;
    sample.difficulty = "s" + std::to_string(s);
    sample.images.push_back({"original", img});
    sample.images.push_back({"transformed", rotate_cw(img, angle)});
    sample.answer = Angle{angle};
    sample.params = RotationParams{s, angle};
    return sample;
}

TaskSample gen_similarity(const ImageBuffer& img, const std::vector<ImageBuffer>& pool,
                          AugStrength strength, RandomSource& rng) {
    if (pool.size() < 3) throw PoolTooSmall("similarity needs >= 3 pool images");

    const ImageBuffer reference = augment_view(img, strength, rng);
    const ImageBuffer positive = augment_view(img, strength, rng);
    const std::vector<int> picks = pick_distinct(static_cast<int>(pool.size()), 3, rng);
    std::vector<ImageBuffer> candidates;
    candidates.reserve(4);
    candidates.push_back(positive);
    for (int idx : picks) {
        candidates.push_back(augment_view(pool[static_cast<std::size_t>(idx)], strength, rng));
    }

    // Uniform shuffle into slots A..D; slot j shows candidates[perm[j]-1].
    const Permutation slot_perm = sample_permutation(4, rng);
    const int positive_slot = slot_perm.inverse().forward[0] - 1;

    TaskSample sample;
    sample.kind = TaskKind::Similarity;
    sample.difficulty = to_string(strength);
    sample.images.push_back({"reference", reference});
    for (int slot = 0; slot < 4; ++slot) {
        sample.images.push_back(
            {kCandidateRoles[slot],
             candidates[static_cast<std::size_t>(slot_perm.forward[slot]) - 1]});
    }
    sample.answer = Choice{positive_slot};
    sample.params = SimilarityParams{strength, positive_slot, picks};
    return sample;
}

TaskSample gen_inpainting(const ImageBuffer& img, double alpha,
                          const std::vector<ImageBuffer>& pool, RandomSource& rng) {
    if (pool.size() < 3) throw PoolTooSmall("inpainting needs >= 3 pool images");

    const Region region = sample_mask_region(img.height, img.width, alpha, rng);
    const ImageBuffer masked = mask_region(img, region);
    const std::vector<int> picks = pick_distinct(static_cast<int>(pool.size()), 3, rng);

    std::vector<ImageBuffer> candidates;
    candidates.reserve(4);
    candidates.push_back(crop_region(img, region));
    for (int idx : picks) {
        ImageBuffer source = pool[static_cast<std::size_t>(idx)];
        if (source.width < region.w || source.height < region.h) {
            // Upscale under-sized donors so a same-sized crop exists.
            const double s = std::max(static_cast<double>(region.w) / source.width,
                                      static_cast<double>(region.h) / source.height);
            source = resize_bilinear(
                source, std::max(region.w, static_cast<int>(std::ceil(source.width * s))),
                std::max(region.h, static_cast<int>(std::ceil(source.height * s))));
        }
        const int x0 = rng.uniform_int(0, source.width - region.w);
        const int y0 = rng.uniform_int(0, source.height - region.h);
        candidates.push_back(crop_region(source, {x0, y0, region.w, region.h}));
    }

    const Permutation slot_perm = sample_permutation(4, rng);
    const int correct_slot = slot_perm.inverse().forward[0] - 1;

    TaskSample sample;
    sample.kind = TaskKind::Inpainting;
    sample.difficulty =
        "a" + std::to_string(static_cast<int>(std::lround(alpha * 100)));
    sample.images.push_back({"masked", masked});
    for (int slot = 0; slot < 4; ++slot) {
        sample.images.push_back(
            {kCandidateRoles[slot],
             candidates[static_cast<std::size_t>(slot_perm.forward[slot]) - 1]});
    }
    sample.answer = Choice{correct_slot};
    sample.params = InpaintingParams{alpha, region, correct_slot, picks};
    return sample;
}

TaskSample gen_ordering(const ImageBuffer& img, int rows, int cols, RandomSource& rng) {
    const std::vector<ImageBuffer> patches = partition_grid(img, rows, cols);
    const int n = rows * cols;
    const Permutation perm = sample_permutation(n, rng);

    TaskSample sample;
    sample.kind = TaskKind::Ordering;
    sample.difficulty = std::to_string(rows) + "x" + std::to_string(cols);
    for (int slot = 1; slot <= n; ++slot) {
        sample.images.push_back(
            {"patch-" + std::to_string(slot),
             patches[static_cast<std::size_t>(perm.forward[slot - 1]) - 1]});
    }
    sample.answer = answer_from_permutation(perm.inverse());
    sample.params = OrderingParams{rows, cols, perm};
    return sample;
}

TaskSample gen_correspondence(const ImageBuffer& img, int k, RandomSource& rng) {
    const std::vector<Point2D> points =
        sample_separated_points(img.height, img.width, k, kMinPointSeparation, rng);
    const AffineMap map = sample_affine(img.height, img.width, points, rng);
    AffineResult warped = apply_affine(img, points, map);
    const Permutation perm = sample_permutation(k, rng);

    std::vector<int> labels(static_cast<std::size_t>(k));
    std::iota(labels.begin(), labels.end(), 1);

    std::vector<Point2D> shuffled(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        shuffled[static_cast<std::size_t>(j)] =
            warped.points[static_cast<std::size_t>(perm.forward[j]) - 1];
    }

    TaskSample sample;
    sample.kind = TaskKind::Correspondence;
    sample.difficulty = "k" + std::to_string(k);
    sample.images.push_back({"original", annotate_points(img, points, labels)});
    sample.images.push_back({"transformed", annotate_points(warped.image, shuffled, labels)});
    sample.answer = answer_from_permutation(perm.inverse());
    sample.params = CorrespondenceParams{k, map, points, warped.points, perm};
    return sample;
}

}  // namespace sslforge
