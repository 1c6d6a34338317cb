// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace sslforge {

/// Deterministic 64-bit random stream (splitmix64 core).
///
/// Every "random" choice in the library draws from a RandomSource, never from
/// std::random_device or the standard distributions, so that a given seed
/// produces identical output bytes on every platform and standard library.
/// Instances are cheap to copy; derive() splits off an independent child
/// stream keyed by a label without advancing the parent.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform integer in the inclusive range [lo, hi]. Requires lo <= hi.
    /// Unbiased via rejection of the top partial block.
    int uniform_int(int lo, int hi);
    std::int64_t uniform_i64(std::int64_t lo, std::int64_t hi);

    /// Uniform double in [lo, hi) with 53 bits of resolution.
    double uniform_real(double lo, double hi);

    /// True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p);

    /// Child stream keyed by the current state and a label. Does not advance
    /// this stream; equal (state, label) pairs give equal children.
    RandomSource derive(std::string_view label) const;

private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit over raw bytes; used for stable seed derivation.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

/// One splitmix64 finalization round; a cheap 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace sslforge
