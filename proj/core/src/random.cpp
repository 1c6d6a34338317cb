// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/random.hpp"

#include <cassert>
#include <cstring>

namespace sslforge {

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t RandomSource::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

int RandomSource::uniform_int(int lo, int hi) {
    return static_cast<int>(uniform_i64(lo, hi));
}

std::int64_t RandomSource::uniform_i64(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full span
    const std::uint64_t bound = (UINT64_MAX / range) * range;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return lo + static_cast<std::int64_t>(x % range);
}

double RandomSource::uniform_real(double lo, double hi) {
    const double unit =
        static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    return lo + unit * (hi - lo);
}

bool RandomSource::bernoulli(double p) {
    return uniform_real(0.0, 1.0) < p;
}

RandomSource RandomSource::derive(std::string_view label) const {
    const std::uint64_t h = fnv1a64(label.data(), label.size());
    return RandomSource(mix64(state_ ^ h));
}

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t basis) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = basis;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace sslforge
