// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/prompts.hpp"

#include <sstream>

#include "sslforge/errors.hpp"

namespace sslforge {

const char* const kFormatSuffix =
    "First write your reasoning inside <think> </think> tags, "
    "then give only your final answer inside \\boxed{}.";

namespace {

std::string angle_set_text(int s) {
    const int step = 360 / s;
    std::ostringstream out;
    for (int i = 0; i < s; ++i) {
        if (i) out << ", ";
        out << i * step;
    }
    return out.str();
}

std::string rotation_prompt(const RotationParams& p) {
    std::ostringstream out;
    out << "The second image is the first image rotated clockwise by an angle "
           "chosen from {"
        << angle_set_text(p.s)
        << "} degrees. Determine the rotation angle. "
           "Answer with the angle as an integer number of degrees.";
    return out.str();
}

std::string similarity_prompt() {
    return "The first image is the reference. The next four images are "
           "candidates A, B, C and D, in that order. Exactly one candidate is "
           "another augmented view of the same source image as the reference; "
           "the rest come from different images. Select the candidate most "
           "visually similar to the reference. Answer with a single letter "
           "A, B, C or D.";
}

std::string inpainting_prompt() {
    return "The first image has a rectangular region covered in solid gray. "
           "The next four images are candidates A, B, C and D, in that order, "
           "each the same size as the missing region. Select the candidate "
           "that correctly fills the masked region. Answer with a single "
           "letter A, B, C or D.";
}

std::string ordering_prompt(const OrderingParams& p) {
    const int n = p.rows * p.cols;
    std::ostringstream out;
    out << "An image was partitioned into a " << p.rows << "x" << p.cols
        << " grid of patches, numbered 1 to " << n
        << " in row-major order (left to right, top to bottom), and the "
           "patches were shuffled. You are shown the shuffled sequence: the "
           "i-th image is the patch at shuffled position i. For each original "
           "position j, give the shuffled position of the patch that belongs "
           "there, so that placing shuffled patch a_j at position j "
           "reconstructs the image. Answer with "
        << n << " comma-separated indices a_1,...,a_" << n << ".";
    return out.str();
}

std::string correspondence_prompt(const CorrespondenceParams& p) {
    std::ostringstream out;
    out << "The first image shows " << p.k
        << " points labelled 1 to " << p.k
        << ". The second image is a geometrically transformed copy of the "
           "first, with the same points relabelled in a shuffled order. For "
           "each point i on the first image, find the label of its "
           "corresponding point on the second image. Answer with "
        << p.k << " comma-separated indices, where the i-th index is the "
           "second-image label matching point i.";
    return out.str();
}

}  // namespace

std::string render_prompt(const TaskSample& sample) {
    std::string body;
    switch (sample.kind) {
        case TaskKind::Rotation:
            body = rotation_prompt(std::get<RotationParams>(sample.params));
            break;
        case TaskKind::Similarity:
            body = similarity_prompt();
            break;
        case TaskKind::Inpainting:
            body = inpainting_prompt();
            break;
        case TaskKind::Ordering:
            body = ordering_prompt(std::get<OrderingParams>(sample.params));
            break;
        case TaskKind::Correspondence:
            body = correspondence_prompt(std::get<CorrespondenceParams>(sample.params));
            break;
    }
    return body + " " + kFormatSuffix;
}

std::string canonical_answer(const AnswerValue& answer) {
    if (const auto* angle = std::get_if<Angle>(&answer)) {
        return std::to_string(angle->degrees);
    }
    if (const auto* choice = std::get_if<Choice>(&answer)) {
        if (choice->index < 0 || choice->index > 3) {
            throw Error("choice index outside A..D");
        }
        return std::string(1, static_cast<char>('A' + choice->index));
    }
    const auto& seq = std::get<std::vector<int>>(answer);
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

const char* answer_kind_name(const AnswerValue& answer) {
    if (std::holds_alternative<Angle>(answer)) return "angle";
    if (std::holds_alternative<Choice>(answer)) return "choice";
    return "permutation";
}

}  // namespace sslforge
