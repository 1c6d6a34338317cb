// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sslforge/augment.hpp"
#include "sslforge/image.hpp"
#include "sslforge/random.hpp"

namespace sslforge {

// ---------------------------------------------------------------------------
// Task vocabulary
// ---------------------------------------------------------------------------

enum class TaskKind { Rotation, Similarity, Inpainting, Ordering, Correspondence };

constexpr std::size_t kTaskCount = 5;

const char* to_string(TaskKind kind);
std::optional<TaskKind> task_from_string(std::string_view name);
std::vector<TaskKind> all_tasks();

/// Answers that are a single value (angle or multiple choice), as opposed
/// to index sequences.
bool is_single_value_task(TaskKind kind);

enum class DifficultyLevel { Easy, Hard };

/// Per-task puzzle parameters; each field carries the two published levels.
struct DifficultyProfile {
    int rotation_s = 4;                           // angle set size: 4 or 8
    double mask_ratio = 0.5;                      // 0.25 or 0.5
    int grid_rows = 3, grid_cols = 3;             // 2x2 or 3x3
    int points_k = 6;                             // 4 or 6
    AugStrength aug_strength = AugStrength::Strong;

    static DifficultyProfile easy();
    static DifficultyProfile hard();
    static DifficultyProfile at(DifficultyLevel level);
};

/// Compact per-task difficulty label ("s4", "weak", "a25", "2x2", "k4", ...).
std::string difficulty_label(TaskKind kind, const DifficultyProfile& profile);

/// Inverse of difficulty_label: reconstruct the profile field a label encodes.
std::optional<DifficultyProfile> profile_from_label(TaskKind kind, std::string_view label);

// ---------------------------------------------------------------------------
// Answers
// ---------------------------------------------------------------------------

/// Bijection on 1..n, stored as the forward list pi(1..n).
struct Permutation {
    std::vector<int> forward;  // 1-based entries

    int size() const { return static_cast<int>(forward.size()); }
    Permutation inverse() const;
    bool valid() const;

    bool operator==(const Permutation&) const = default;
};

struct Angle {
    int degrees = 0;
    bool operator==(const Angle&) const = default;
};

struct Choice {
    int index = 0;  // 0-based slot among A..D
    bool operator==(const Choice&) const = default;
};

/// Ground truth or parsed prediction. The sequence alternative holds raw
/// 1-based indices: ground truths are valid permutations, but predictions
/// may carry duplicates or wrong lengths (graded position-wise).
using AnswerValue = std::variant<Angle, Choice, std::vector<int>>;

AnswerValue answer_from_permutation(const Permutation& p);

// ---------------------------------------------------------------------------
// Task samples
// ---------------------------------------------------------------------------

struct RotationParams {
    int s = 4;
    int angle = 0;
};

struct SimilarityParams {
    AugStrength strength = AugStrength::Strong;
    int positive_slot = 0;                // 0-based
    std::vector<int> negative_pool_indices;  // positions within the supplied pool
};

struct InpaintingParams {
    double alpha = 0.5;
    Region region;
    int correct_slot = 0;
    std::vector<int> distractor_pool_indices;
};

struct OrderingParams {
    int rows = 3, cols = 3;
    Permutation perm;  // forward shuffle applied to the patch sequence
};

struct CorrespondenceParams {
    int k = 6;
    AffineMap map;
    std::vector<Point2D> points;
    std::vector<Point2D> transformed_points;
    Permutation perm;  // forward shuffle of the transformed labels
};

using TaskParams = std::variant<RotationParams, SimilarityParams, InpaintingParams,
                                OrderingParams, CorrespondenceParams>;

struct TaggedImage {
    std::string role;
    ImageBuffer image;
};

/// One generated puzzle: payload images, canonical ground truth, and the
/// parameters needed to re-verify the answer independently.
struct TaskSample {
    std::string id;
    TaskKind kind = TaskKind::Rotation;
    std::string difficulty;  // per-task label, e.g. "s4"
    std::string prompt;      // filled by prompts::render_prompt
    std::vector<TaggedImage> images;
    AnswerValue answer;
    TaskParams params;
};

// ---------------------------------------------------------------------------
// Constrained samplers
// ---------------------------------------------------------------------------

/// Mask rectangle with area alpha*H*W (within 2% relative error), both edges
/// at least 28 px, uniformly placed. Throws InfeasibleMask when no such
/// rectangle exists.
Region sample_mask_region(int img_height, int img_width, double alpha, RandomSource& rng);

/// Uniform over all n! permutations (Fisher-Yates); identity permitted.
Permutation sample_permutation(int n, RandomSource& rng);

/// k points with pairwise distance >= min_dist and >= 12 px of border
/// clearance, by bounded rejection (10000 attempts total). Throws
/// SamplingExhausted when the packing is infeasible.
std::vector<Point2D> sample_separated_points(int img_height, int img_width, int k,
                                             double min_dist, RandomSource& rng);

constexpr double kMinPointSeparation = 40.0;
constexpr double kPointBorderMargin = 12.0;

/// Parameter ranges for sample_affine; deviations halve on repeated failure.
struct AffineRanges {
    double rotation_deg = 30.0;
    double scale_dev = 0.25;   // scale drawn from [1 - dev, 1 + dev]
    double shear_deg = 10.0;
    double translate_frac = 0.1;  // of image width/height
};

/// Random rotation/scale/shear/translation about the image centre such that
/// every transformed point keeps the 12 px border margin. Up to 100 draws per
/// range level, then ranges halve; throws SamplingExhausted after 20 levels.
AffineMap sample_affine(int img_height, int img_width, const std::vector<Point2D>& points,
                        RandomSource& rng, const AffineRanges& ranges = {});

// ---------------------------------------------------------------------------
// Puzzle generators
// ---------------------------------------------------------------------------

/// Rotation prediction: angle drawn uniformly from {i*360/s : i = 0..s-1}.
/// Images: [original, transformed]. Answer: the angle in degrees.
TaskSample gen_rotation(const ImageBuffer& img, int s, RandomSource& rng);

/// Visual similarity: reference and positive view are independent
/// augmentations of `img`; three negatives come from distinct pool images.
/// Images: [reference, candidate-A..D]. Answer: slot of the positive.
TaskSample gen_similarity(const ImageBuffer& img, const std::vector<ImageBuffer>& pool,
                          AugStrength strength, RandomSource& rng);

/// Region inpainting: the masked region's true crop hides among three
/// same-sized crops from distinct pool images.
/// Images: [masked, candidate-A..D]. Answer: slot of the true crop.
TaskSample gen_inpainting(const ImageBuffer& img, double alpha,
                          const std::vector<ImageBuffer>& pool, RandomSource& rng);

/// Patch ordering: grid patches presented in shuffled order.
/// Answer position j = shuffled slot holding original patch j, so placing
/// shuffled[answer[j]] at slot j reconstructs the image.
TaskSample gen_ordering(const ImageBuffer& img, int rows, int cols, RandomSource& rng);

/// Geometric correspondence: k labelled points, an affine-warped copy with
/// shuffled labels. Answer position i = transformed-image label that marks
/// the point corresponding to original point i.
TaskSample gen_correspondence(const ImageBuffer& img, int k, RandomSource& rng);

}  // namespace sslforge
