// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sslforge/augment.hpp"
#include "sslforge/image.hpp"
#include "sslforge/random.hpp"
#include "sslforge/taskgen.hpp"

namespace {

sslforge::ImageBuffer bench_image(int size) {
    sslforge::ImageBuffer img = sslforge::ImageBuffer::blank(size, size);
    sslforge::RandomSource rng(1);
    for (std::uint8_t& b : img.data) b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    return img;
}

void BM_RotateQuarter(benchmark::State& state) {
    const auto img = bench_image(448);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sslforge::rotate_cw(img, 90));
    }
}
BENCHMARK(BM_RotateQuarter);

void BM_RotateDiagonal(benchmark::State& state) {
    const auto img = bench_image(448);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sslforge::rotate_cw(img, 45));
    }
}
BENCHMARK(BM_RotateDiagonal);

void BM_AugmentStrong(benchmark::State& state) {
    const auto img = bench_image(448);
    sslforge::RandomSource rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sslforge::augment_view(img, sslforge::AugStrength::Strong, rng));
    }
}
BENCHMARK(BM_AugmentStrong);

void BM_AffineWarp(benchmark::State& state) {
    const auto img = bench_image(448);
    const std::vector<sslforge::Point2D> pts{{50, 50}, {200, 300}, {400, 100}};
    sslforge::RandomSource rng(9);
    const sslforge::AffineMap map = sslforge::sample_affine(448, 448, pts, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sslforge::apply_affine(img, pts, map));
    }
}
BENCHMARK(BM_AffineWarp);

void BM_GenCorrespondence(benchmark::State& state) {
    const auto img = bench_image(448);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        sslforge::RandomSource rng(seed++);
        benchmark::DoNotOptimize(sslforge::gen_correspondence(img, 6, rng));
    }
}
BENCHMARK(BM_GenCorrespondence);

}  // namespace

BENCHMARK_MAIN();
