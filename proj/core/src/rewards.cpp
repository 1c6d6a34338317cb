// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/rewards.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace sslforge {

namespace {

constexpr std::string_view kThinkOpen = "<think>";
constexpr std::string_view kThinkClose = "</think>";
constexpr std::string_view kBoxedOpen = "\\boxed{";

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

/// Content of the brace group starting right after `open_pos + "\boxed{"`,
/// or nullopt when the braces never balance.
std::optional<std::string> extract_braced(std::string_view text, std::size_t open_pos) {
    int depth = 1;
    const std::size_t start = open_pos + kBoxedOpen.size();
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] == '{') {
            ++depth;
        } else if (text[i] == '}') {
            if (--depth == 0) return std::string(text.substr(start, i - start));
        }
    }
    return std::nullopt;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool ends_with_ci(std::string_view s, std::string_view suffix) {
    if (s.size() < suffix.size()) return false;
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        const char a = static_cast<char>(
            std::tolower(static_cast<unsigned char>(s[s.size() - suffix.size() + i])));
        if (a != suffix[i]) return false;
    }
    return true;
}

std::optional<AnswerValue> parse_angle(std::string_view s) {
    s = trim(s);
    if (ends_with_ci(s, "degrees")) {
        s = trim(s.substr(0, s.size() - 7));
    } else if (ends_with_ci(s, "degree")) {
        s = trim(s.substr(0, s.size() - 6));
    } else if (s.size() >= 2 && static_cast<unsigned char>(s[s.size() - 2]) == 0xC2 &&
               static_cast<unsigned char>(s[s.size() - 1]) == 0xB0) {
        s = trim(s.substr(0, s.size() - 2));  // UTF-8 degree sign
    }
    if (s.empty()) return std::nullopt;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    // Accept the union of the supported angle sets (S in {4, 8}).
    if (value < 0 || value >= 360 || value % 45 != 0) return std::nullopt;
    return AnswerValue{Angle{value}};
}

std::optional<AnswerValue> parse_choice(std::string_view s) {
    s = trim(s);
    // Peel decorations like "(c)", "C.", "(B)." in any stable order.
    bool changed = true;
    while (changed && !s.empty()) {
        changed = false;
        if (s.back() == '.') {
            s = trim(s.substr(0, s.size() - 1));
            changed = true;
        }
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            s = trim(s.substr(1, s.size() - 2));
            changed = true;
        }
    }
    if (s.size() != 1) return std::nullopt;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'D') return std::nullopt;
    return AnswerValue{Choice{c - 'A'}};
}

std::optional<AnswerValue> parse_sequence(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') ||
                          (s.front() == '(' && s.back() == ')'))) {
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> values;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) {
            ++i;
        }
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ',' &&
               !std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        const std::string_view token = s.substr(start, i - start);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
            return std::nullopt;
        }
        values.push_back(value);
    }
    if (values.empty()) return std::nullopt;
    return AnswerValue{values};
}

}  // namespace

const char* to_string(FormatViolation v) {
    switch (v) {
        case FormatViolation::MissingThink: return "MissingThink";
        case FormatViolation::DuplicateTag: return "DuplicateTag";
        case FormatViolation::OrderViolation: return "OrderViolation";
        case FormatViolation::MissingBoxed: return "MissingBoxed";
        case FormatViolation::UnbalancedBraces: return "UnbalancedBraces";
    }
    return "?";
}

ParsedResponse parse_response(std::string_view text) {
    ParsedResponse result;

    const std::size_t open_count = count_occurrences(text, kThinkOpen);
    const std::size_t close_count = count_occurrences(text, kThinkClose);
    const std::size_t boxed_count = count_occurrences(text, kBoxedOpen);

    const std::size_t open_pos = text.find(kThinkOpen);
    // Best-effort span extraction regardless of the verdict below.
    if (open_pos != std::string_view::npos) {
        const std::size_t close_pos = text.find(kThinkClose, open_pos + kThinkOpen.size());
        if (close_pos != std::string_view::npos) {
            const std::size_t start = open_pos + kThinkOpen.size();
            result.think = std::string(text.substr(start, close_pos - start));
        }
    }
    const std::size_t boxed_pos = text.find(kBoxedOpen);
    if (boxed_pos != std::string_view::npos) {
        result.boxed = extract_braced(text, boxed_pos);
    }

    const auto fail = [&](FormatViolation v) {
        result.violation = v;
        result.format_ok = false;
        return result;
    };

    if (open_count == 0 || close_count == 0) return fail(FormatViolation::MissingThink);
    if (open_count > 1 || close_count > 1) return fail(FormatViolation::DuplicateTag);
    const std::size_t close_pos = text.find(kThinkClose);
    if (close_pos < open_pos) return fail(FormatViolation::OrderViolation);
    if (boxed_count == 0) return fail(FormatViolation::MissingBoxed);
    if (boxed_count > 1) return fail(FormatViolation::DuplicateTag);
    if (boxed_pos < close_pos + kThinkClose.size()) {
        return fail(FormatViolation::OrderViolation);
    }
    if (!result.boxed) return fail(FormatViolation::UnbalancedBraces);

    result.format_ok = true;
    return result;
}

double format_reward(std::string_view text) {
    return parse_response(text).format_ok ? 0.2 : 0.0;
}

std::optional<AnswerValue> parse_answer(TaskKind kind, std::string_view boxed) {
    switch (kind) {
        case TaskKind::Rotation:
            return parse_angle(boxed);
        case TaskKind::Similarity:
        case TaskKind::Inpainting:
            return parse_choice(boxed);
        case TaskKind::Ordering:
        case TaskKind::Correspondence:
            return parse_sequence(boxed);
    }
    return std::nullopt;
}

double accuracy_reward(TaskKind kind, const std::optional<AnswerValue>& predicted,
                       const AnswerValue& truth) {
    if (!predicted) return 0.0;
    if (is_single_value_task(kind)) {
        return *predicted == truth ? 1.0 : 0.0;
    }
    const auto* truth_seq = std::get_if<std::vector<int>>(&truth);
    const auto* pred_seq = std::get_if<std::vector<int>>(&*predicted);
    if (!truth_seq || !pred_seq || truth_seq->empty()) return 0.0;
    const std::size_t n = truth_seq->size();
    const std::size_t upto = std::min(n, pred_seq->size());
    std::size_t correct = 0;
    for (std::size_t i = 0; i < upto; ++i) {
        if ((*pred_seq)[i] == (*truth_seq)[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(n);
}

bool exact_match(TaskKind kind, const std::optional<AnswerValue>& predicted,
                 const AnswerValue& truth) {
    (void)kind;
    return predicted && *predicted == truth;
}

RewardBreakdown total_reward(TaskKind kind, std::string_view response,
                             const AnswerValue& truth) {
    return grade_response(kind, response, truth).reward;
}

GradeResult grade_response(TaskKind kind, std::string_view response,
                           const AnswerValue& truth) {
    GradeResult result;
    result.parsed = parse_response(response);
    if (result.parsed.boxed) {
        result.predicted = parse_answer(kind, *result.parsed.boxed);
    }
    result.reward.accuracy = accuracy_reward(kind, result.predicted, truth);
    result.reward.format = result.parsed.format_ok ? 0.2 : 0.0;
    result.reward.total = result.reward.accuracy + result.reward.format;
    result.exact = exact_match(kind, result.predicted, truth);
    return result;
}

}  // namespace sslforge
