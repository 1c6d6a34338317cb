// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/augment.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sslforge/errors.hpp"

namespace sslforge {

namespace {

// Float working raster; values in [0, 255].
struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // rgb interleaved

    explicit FloatImage(const ImageBuffer& img)
        : width(img.width), height(img.height), data(img.data.begin(), img.data.end()) {}

    ImageBuffer quantize() const {
        ImageBuffer out = ImageBuffer::blank(width, height);
        for (std::size_t i = 0; i < data.size(); ++i) {
            out.data[i] = static_cast<std::uint8_t>(
                std::clamp(std::lround(data[i]), 0L, 255L));
        }
        return out;
    }
};

constexpr float kLumaR = 0.299f;
constexpr float kLumaG = 0.587f;
constexpr float kLumaB = 0.114f;

void clamp_all(FloatImage& img) {
    for (float& v : img.data) v = std::clamp(v, 0.0f, 255.0f);
}

void adjust_brightness(FloatImage& img, float factor) {
    for (float& v : img.data) v *= factor;
    clamp_all(img);
}

void adjust_contrast(FloatImage& img, float factor) {
    double mean = 0.0;
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        mean += kLumaR * img.data[i] + kLumaG * img.data[i + 1] + kLumaB * img.data[i + 2];
    }
    mean /= static_cast<double>(img.data.size() / 3);
    const float m = static_cast<float>(mean);
    for (float& v : img.data) v = m + (v - m) * factor;
    clamp_all(img);
}

void adjust_saturation(FloatImage& img, float factor) {
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        const float luma =
            kLumaR * img.data[i] + kLumaG * img.data[i + 1] + kLumaB * img.data[i + 2];
        for (int ch = 0; ch < 3; ++ch) {
            img.data[i + ch] = luma + (img.data[i + ch] - luma) * factor;
        }
    }
    clamp_all(img);
}

// shift in turns of the full hue circle, in [-0.5, 0.5].
void adjust_hue(FloatImage& img, float shift) {
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        const float r = img.data[i] / 255.0f;
        const float g = img.data[i + 1] / 255.0f;
        const float b = img.data[i + 2] / 255.0f;
        const float mx = std::max({r, g, b});
        const float mn = std::min({r, g, b});
        const float delta = mx - mn;
        float h = 0.0f;
        if (delta > 0.0f) {
            if (mx == r) {
                h = std::fmod((g - b) / delta, 6.0f);
                if (h < 0.0f) h += 6.0f;
            } else if (mx == g) {
                h = (b - r) / delta + 2.0f;
            } else {
                h = (r - g) / delta + 4.0f;
            }
            h /= 6.0f;
        }
        const float s = mx > 0.0f ? delta / mx : 0.0f;
        const float v = mx;

        h = std::fmod(h + shift + 1.0f, 1.0f);
        const float sector = h * 6.0f;
        const int idx = std::min(static_cast<int>(sector), 5);
        const float frac = sector - idx;
        const float p = v * (1.0f - s);
        const float q = v * (1.0f - s * frac);
        const float t = v * (1.0f - s * (1.0f - frac));
        float nr, ng, nb;
        switch (idx) {
            case 0: nr = v; ng = t; nb = p; break;
            case 1: nr = q; ng = v; nb = p; break;
            case 2: nr = p; ng = v; nb = t; break;
            case 3: nr = p; ng = q; nb = v; break;
            case 4: nr = t; ng = p; nb = v; break;
            default: nr = v; ng = p; nb = q; break;
        }
        img.data[i] = nr * 255.0f;
        img.data[i + 1] = ng * 255.0f;
        img.data[i + 2] = nb * 255.0f;
    }
}

void to_grayscale(FloatImage& img) {
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        const float luma =
            kLumaR * img.data[i] + kLumaG * img.data[i + 1] + kLumaB * img.data[i + 2];
        img.data[i] = img.data[i + 1] = img.data[i + 2] = luma;
    }
}

void gaussian_blur(FloatImage& img, double sigma) {
    const int radius = static_cast<int>(std::ceil(2.0 * sigma));
    if (radius < 1) return;
    std::vector<float> kernel(static_cast<std::size_t>(radius) * 2 + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
        kernel[i + radius] = static_cast<float>(w);
        sum += w;
    }
    for (float& w : kernel) w = static_cast<float>(w / sum);

    const int w_img = img.width;
    const int h_img = img.height;
    std::vector<float> tmp(img.data.size());
    // Horizontal pass, edge clamp.
    for (int y = 0; y < h_img; ++y) {
        for (int x = 0; x < w_img; ++x) {
            float acc[3] = {0, 0, 0};
            for (int k = -radius; k <= radius; ++k) {
                const int sx = std::clamp(x + k, 0, w_img - 1);
                const std::size_t s = 3 * (static_cast<std::size_t>(y) * w_img + sx);
                const float kw = kernel[k + radius];
                acc[0] += kw * img.data[s];
                acc[1] += kw * img.data[s + 1];
                acc[2] += kw * img.data[s + 2];
            }
            const std::size_t d = 3 * (static_cast<std::size_t>(y) * w_img + x);
            tmp[d] = acc[0];
            tmp[d + 1] = acc[1];
            tmp[d + 2] = acc[2];
        }
    }
    // Vertical pass.
    for (int y = 0; y < h_img; ++y) {
        for (int x = 0; x < w_img; ++x) {
            float acc[3] = {0, 0, 0};
            for (int k = -radius; k <= radius; ++k) {
                const int sy = std::clamp(y + k, 0, h_img - 1);
                const std::size_t s = 3 * (static_cast<std::size_t>(sy) * w_img + x);
                const float kw = kernel[k + radius];
                acc[0] += kw * tmp[s];
                acc[1] += kw * tmp[s + 1];
                acc[2] += kw * tmp[s + 2];
            }
            const std::size_t d = 3 * (static_cast<std::size_t>(y) * w_img + x);
            img.data[d] = acc[0];
            img.data[d + 1] = acc[1];
            img.data[d + 2] = acc[2];
        }
    }
}

Region random_resized_crop(const ImageBuffer& img, double scale_lo, double scale_hi,
                           RandomSource& rng) {
    const double area = static_cast<double>(img.width) * img.height;
    const double log_lo = std::log(3.0 / 4.0);
    const double log_hi = std::log(4.0 / 3.0);
    for (int attempt = 0; attempt < 10; ++attempt) {
        const double target = rng.uniform_real(scale_lo, scale_hi) * area;
        const double aspect = std::exp(rng.uniform_real(log_lo, log_hi));
        const int w = static_cast<int>(std::lround(std::sqrt(target * aspect)));
        const int h = static_cast<int>(std::lround(std::sqrt(target / aspect)));
        if (w >= 1 && h >= 1 && w <= img.width && h <= img.height) {
            const int x0 = rng.uniform_int(0, img.width - w);
            const int y0 = rng.uniform_int(0, img.height - h);
            return {x0, y0, w, h};
        }
    }
    // Fallback: centred square of the short side.
    const int side = std::min(img.width, img.height);
    return {(img.width - side) / 2, (img.height - side) / 2, side, side};
}

}  // namespace

const char* to_string(AugStrength s) {
    return s == AugStrength::Weak ? "weak" : "strong";
}

ImageBuffer augment_view(const ImageBuffer& img, AugStrength strength,
                         RandomSource& rng) {
    if (img.width < 32 || img.height < 32) {
        throw ImageTooSmall("augment_view needs at least 32x32 input");
    }
    const bool strong = strength == AugStrength::Strong;
    const double scale_lo = strong ? 0.2 : 0.6;
    const double jitter_p = strong ? 0.8 : 0.2;
    const double jitter_strength = strong ? 0.8 : 0.4;
    const double hue_strength = strong ? 0.2 : 0.1;

    const Region crop = random_resized_crop(img, scale_lo, 1.0, rng);
    ImageBuffer view =
        resize_bilinear(crop_region(img, crop), kAugmentOutputSize, kAugmentOutputSize);

    if (rng.bernoulli(0.5)) view = flip_horizontal(view);

    FloatImage work(view);
    if (rng.bernoulli(jitter_p)) {
        // The four jitter sub-ops run in a random order, SimCLR-style.
        int order[4] = {0, 1, 2, 3};
        for (int i = 3; i > 0; --i) std::swap(order[i], order[rng.uniform_int(0, i)]);
        for (int op : order) {
            switch (op) {
                case 0:
                    adjust_brightness(work, static_cast<float>(rng.uniform_real(
                                                1.0 - jitter_strength, 1.0 + jitter_strength)));
                    break;
                case 1:
                    adjust_contrast(work, static_cast<float>(rng.uniform_real(
                                              1.0 - jitter_strength, 1.0 + jitter_strength)));
                    break;
                case 2:
                    adjust_saturation(work, static_cast<float>(rng.uniform_real(
                                                1.0 - jitter_strength, 1.0 + jitter_strength)));
                    break;
                default:
                    adjust_hue(work,
                               static_cast<float>(rng.uniform_real(-hue_strength, hue_strength)));
                    break;
            }
        }
    }
    if (strong && rng.bernoulli(0.2)) to_grayscale(work);
    if (strong && rng.bernoulli(0.5)) gaussian_blur(work, rng.uniform_real(0.1, 2.0));

    return work.quantize();
}

}  // namespace sslforge
