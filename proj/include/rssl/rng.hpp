#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace rssl {

// Purpose tags used as the last element of a stream label, so that streams
// drawn for different jobs can never collide even under identical indices.
enum StreamPurpose : std::uint64_t {
    kPurposeBootstrap = 1,
    kPurposeSubset = 2,
    kPurposeGenerate = 3,
    kPurposeSplit = 4,
    kPurposeTree = 5,
};

/// Deterministic splittable pseudo-random stream.
///
/// A stream is addressed by (master_seed, label) where the label is an ordered
/// list of 64-bit integers, conventionally (replication, learner, purpose).
/// Derivation chains the splitmix64 avalanche finalizer over the seed and each
/// label element, which is order-sensitive and collision-resistant; the stream
/// itself advances a splitmix64 state. All outputs are identical across
/// platforms for identical (seed, label); pinned vectors live in
/// tests/vectors/rng.txt.
class RngStream {
public:
    static RngStream derive(std::uint64_t master_seed, std::span<const std::uint64_t> label) {
        if (label.empty()) {
            throw std::invalid_argument("RngStream::derive: label must be non-empty");
        }
        std::uint64_t s = mix64(master_seed);
        for (std::uint64_t x : label) {
            s = mix64(s ^ mix64(x));
        }
        return RngStream(s);
    }

    static RngStream derive(std::uint64_t master_seed, std::initializer_list<std::uint64_t> label) {
        return derive(master_seed, std::span<const std::uint64_t>(label.begin(), label.size()));
    }

    static RngStream derive(std::uint64_t master_seed, const std::vector<std::uint64_t>& label) {
        return derive(master_seed, std::span<const std::uint64_t>(label.data(), label.size()));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased integer in [0, k) via rejection sampling.
    std::uint64_t next_index(std::uint64_t k) {
        if (k == 0) {
            throw std::invalid_argument("RngStream::next_index: k must be positive");
        }
        const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % k;
            }
        }
    }

    /// Standard normal via the Marsaglia polar transform, second value cached.
    double next_gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_uniform() - 1.0;
            v = 2.0 * next_uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        has_cached_ = true;
        return u * f;
    }

private:
    explicit RngStream(std::uint64_t state) : state_(state) {}

    // splitmix64 finalizer (Steele/Lea/Flood constants).
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace rssl
