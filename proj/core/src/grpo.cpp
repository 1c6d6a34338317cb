// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/grpo.hpp"

#include <cmath>

#include "sslforge/errors.hpp"
#include "sslforge/prompts.hpp"

namespace sslforge {

namespace {

AnswerValue wrong_answer(TaskKind kind, const AnswerValue& truth,
                         const DifficultyProfile& profile, RandomSource& rng) {
    switch (kind) {
        case TaskKind::Rotation: {
            const int s = profile.rotation_s;
            const int step = 360 / s;
            const int truth_idx = std::get<Angle>(truth).degrees / step;
            // Uniform over the s - 1 incorrect angles.
            int idx = rng.uniform_int(0, s - 2);
            if (idx >= truth_idx) ++idx;
            return Angle{idx * step};
        }
        case TaskKind::Similarity:
        case TaskKind::Inpainting: {
            const int truth_idx = std::get<Choice>(truth).index;
            int idx = rng.uniform_int(0, 2);
            if (idx >= truth_idx) ++idx;
            return Choice{idx};
        }
        case TaskKind::Ordering:
        case TaskKind::Correspondence: {
            const auto& truth_seq = std::get<std::vector<int>>(truth);
            const int n = static_cast<int>(truth_seq.size());
            if (n < 2) return truth;  // no wrong permutation exists
            for (;;) {
                const Permutation p = sample_permutation(n, rng);
                if (p.forward != truth_seq) return p.forward;
            }
        }
    }
    return truth;
}

}  // namespace

AdvantageVector group_advantages(const RewardGroup& group) {
    const std::size_t n = group.rewards.size();
    if (n == 0) throw EmptyGroup("cannot standardise an empty reward group");
    for (double r : group.rewards) {
        if (!std::isfinite(r)) throw Error("non-finite reward in group");
    }

    double mean = 0.0;
    for (double r : group.rewards) mean += r;
    mean /= static_cast<double>(n);

    double variance = 0.0;
    for (double r : group.rewards) variance += (r - mean) * (r - mean);
    variance /= static_cast<double>(n);
    const double stddev = std::sqrt(variance);

    AdvantageVector out;
    out.mean = mean;
    out.stddev = stddev;
    out.advantages.resize(n, 0.0);
    if (stddev >= kDegenerateStd) {
        for (std::size_t i = 0; i < n; ++i) {
            out.advantages[i] = (group.rewards[i] - mean) / stddev;
        }
    }
    return out;
}

RewardGroup simulate_group(double p_correct, int group_size, TaskKind kind,
                           const AnswerValue& truth, const DifficultyProfile& profile,
                           RandomSource& rng) {
    if (group_size < 1) throw Error("group size must be >= 1");
    RewardGroup group;
    group.rewards.reserve(static_cast<std::size_t>(group_size));
    for (int i = 0; i < group_size; ++i) {
        const AnswerValue answer =
            rng.bernoulli(p_correct) ? truth : wrong_answer(kind, truth, profile, rng);
        const std::string response = "<think>simulated reasoning</think> \\boxed{" +
                                     canonical_answer(answer) + "}";
        group.rewards.push_back(total_reward(kind, response, truth).total);
    }
    return group;
}

}  // namespace sslforge
