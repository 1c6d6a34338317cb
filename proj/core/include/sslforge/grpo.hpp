// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sslforge/random.hpp"
#include "sslforge/rewards.hpp"
#include "sslforge/taskgen.hpp"

namespace sslforge {

/// Rewards of the L responses sampled for one prompt.
struct RewardGroup {
    std::vector<double> rewards;
};

/// Group-standardised advantages: A_i = (r_i - mean) / std, population std.
/// Groups with std below 1e-12 yield all-zero advantages.
struct AdvantageVector {
    std::vector<double> advantages;
    double mean = 0.0;
    double stddev = 0.0;
};

constexpr double kDegenerateStd = 1e-12;

/// Throws EmptyGroup for an empty group; non-finite rewards are rejected.
AdvantageVector group_advantages(const RewardGroup& group);

/// Default group size used in training runs.
constexpr int kDefaultGroupSize = 16;

/// Mock policy: each of the `group_size` responses is well-formed and correct
/// with probability `p_correct`, otherwise well-formed with a uniformly drawn
/// wrong answer. Responses are graded with the full reward rule, so totals
/// land in {0.2, accuracy + 0.2}.
RewardGroup simulate_group(double p_correct, int group_size, TaskKind kind,
                           const AnswerValue& truth, const DifficultyProfile& profile,
                           RandomSource& rng);

}  // namespace sslforge
