// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "sslforge/taskgen.hpp"

namespace sslforge {

/// Appended verbatim to every rendered prompt: requires reasoning in
/// <think> </think> followed by the final answer in \boxed{}.
extern const char* const kFormatSuffix;

/// Deterministic question text for a sample: task description, candidate
/// labels where applicable, the required answer grammar, and exactly one
/// format suffix at the end.
std::string render_prompt(const TaskSample& sample);

/// Canonical answer text: "90" (angle), "C" (choice), "3,1,2" (sequence).
std::string canonical_answer(const AnswerValue& answer);

const char* answer_kind_name(const AnswerValue& answer);  // angle|choice|permutation

}  // namespace sslforge
