// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sslforge/taskgen.hpp"

namespace sslforge {

enum class FormatViolation {
    MissingThink,
    DuplicateTag,
    OrderViolation,
    MissingBoxed,
    UnbalancedBraces,
};

const char* to_string(FormatViolation v);

/// Outcome of the strict format check. Spans are extracted best-effort even
/// when the check fails, for diagnostics and for grading under decision that
/// accuracy is independent of format.
struct ParsedResponse {
    std::optional<std::string> think;
    std::optional<std::string> boxed;
    bool format_ok = false;
    std::optional<FormatViolation> violation;
};

/// Strict format rule: exactly one <think> and one </think> with the open
/// before the close, exactly one \boxed{ occurring after </think>, boxed
/// content read by balanced-brace matching. Total over any input.
ParsedResponse parse_response(std::string_view text);

/// 0.2 when parse_response reports a well-formed response, else 0.0.
double format_reward(std::string_view text);

/// Lenient normalisation of a boxed span into a typed answer:
///  - Rotation: integer degrees, optional "°"/"degrees" suffix, must lie in
///    the 45-degree angle lattice {0, 45, ..., 315};
///  - Similarity/Inpainting: one letter A-D, case-insensitive, tolerating
///    surrounding parentheses or a trailing period;
///  - Ordering/Correspondence: 1-based integers split on commas and/or
///    whitespace, optional surrounding brackets; duplicates and wrong lengths
///    are preserved for graded scoring.
/// Returns nullopt when nothing parses.
std::optional<AnswerValue> parse_answer(TaskKind kind, std::string_view boxed);

/// Binary for single-value tasks; fraction of correctly placed indices
/// (denominator = truth length) for sequence tasks. Absent predictions score 0.
double accuracy_reward(TaskKind kind, const std::optional<AnswerValue>& predicted,
                       const AnswerValue& truth);

/// Full canonical equality (sequence kinds require equal length).
bool exact_match(TaskKind kind, const std::optional<AnswerValue>& predicted,
                 const AnswerValue& truth);

struct RewardBreakdown {
    double accuracy = 0.0;
    double format = 0.0;
    double total = 0.0;
};

/// Accuracy plus format bonus. The answer is graded from the boxed span
/// whenever one was extracted, even if the format check failed.
RewardBreakdown total_reward(TaskKind kind, std::string_view response,
                             const AnswerValue& truth);

/// One-stop grading record for harnesses: parse, rewards and exact match.
struct GradeResult {
    ParsedResponse parsed;
    std::optional<AnswerValue> predicted;
    RewardBreakdown reward;
    bool exact = false;
};

GradeResult grade_response(TaskKind kind, std::string_view response,
                           const AnswerValue& truth);

}  // namespace sslforge
