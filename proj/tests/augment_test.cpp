// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/augment.hpp"

#include <doctest.h>

#include "sslforge/errors.hpp"
#include "testutil.hpp"

using namespace sslforge;

namespace {

bool is_uniform(const ImageBuffer& img) {
    for (std::size_t i = 3; i < img.data.size(); i += 3) {
        if (img.data[i] != img.data[0] || img.data[i + 1] != img.data[1] ||
            img.data[i + 2] != img.data[2]) {
            return false;
        }
    }
    return true;
}

bool all_gray(const ImageBuffer& img) {
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        if (img.data[i] != img.data[i + 1] || img.data[i + 1] != img.data[i + 2]) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("augmented views are 224x224 and seed-deterministic") {
    const ImageBuffer img = testutil::noise_image(448, 448, 31);
    RandomSource a(2024), b(2024);
    const ImageBuffer va = augment_view(img, AugStrength::Strong, a);
    const ImageBuffer vb = augment_view(img, AugStrength::Strong, b);
    CHECK(va.width == 224);
    CHECK(va.height == 224);
    CHECK(va == vb);
}

TEST_CASE("different seeds diverge") {
    const ImageBuffer img = testutil::noise_image(256, 256, 32);
    RandomSource a(1), b(2);
    CHECK(augment_view(img, AugStrength::Strong, a) !=
          augment_view(img, AugStrength::Strong, b));
}

TEST_CASE("weak augmentation keeps constant images constant modulo jitter") {
    const ImageBuffer img = ImageBuffer::filled(128, 128, {37, 180, 90});
    int untouched = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomSource rng(seed);
        const ImageBuffer view = augment_view(img, AugStrength::Weak, rng);
        // Crop, flip and resize cannot introduce structure on a flat field,
        // and every colour op maps a uniform image to a uniform image.
        CHECK(is_uniform(view));
        if (view == ImageBuffer::filled(224, 224, {37, 180, 90})) ++untouched;
    }
    // The weak jitter gate fires with p = 0.2, so most seeds are untouched.
    CHECK(untouched >= 10);
}

TEST_CASE("strong grayscale branch fires about one time in five") {
    const ImageBuffer img = testutil::noise_image(200, 200, 33);
    int gray = 0;
    const int trials = 200;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        RandomSource rng(seed * 7919 + 1);
        if (all_gray(augment_view(img, AugStrength::Strong, rng))) ++gray;
    }
    const double rate = static_cast<double>(gray) / trials;
    CHECK(rate > 0.08);   // ~3 sigma around 0.2 with n=200
    CHECK(rate < 0.35);
}

TEST_CASE("weak augmentation never produces grayscale conversions") {
    const ImageBuffer img = testutil::noise_image(200, 200, 34);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RandomSource rng(seed);
        CHECK_FALSE(all_gray(augment_view(img, AugStrength::Weak, rng)));
    }
}

TEST_CASE("tiny inputs are rejected") {
    const ImageBuffer img = ImageBuffer::blank(31, 64);
    RandomSource rng(1);
    CHECK_THROWS_AS(augment_view(img, AugStrength::Strong, rng), ImageTooSmall);
}
