// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sslforge/image.hpp"
#include "sslforge/random.hpp"

namespace sslforge {

enum class AugStrength { Weak, Strong };

const char* to_string(AugStrength s);

/// SimCLR-style augmented 224x224 view.
///
/// Strong: random resized crop (area scale 0.2..1.0, aspect 3/4..4/3),
/// horizontal flip p=0.5, color distortion p=0.8 (brightness/contrast/
/// saturation factors within +/-0.8, hue shift within +/-0.2 of the full
/// circle, applied in random order), grayscale p=0.2, Gaussian blur p=0.5
/// (sigma 0.1..2.0, kernel radius = ceil(2*sigma)).
///
/// Weak: crop scale 0.6..1.0, flip p=0.5, color distortion p=0.2 with
/// half-strength factors, no grayscale, no blur.
///
/// Requires the source to be at least 32x32 (throws ImageTooSmall).
ImageBuffer augment_view(const ImageBuffer& img, AugStrength strength,
                         RandomSource& rng);

constexpr int kAugmentOutputSize = 224;

}  // namespace sslforge
