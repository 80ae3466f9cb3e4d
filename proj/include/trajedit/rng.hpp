// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace trajedit {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic RNG with a fully specified sequence (splitmix64 stream,
/// Box-Muller normals), so outputs are bitwise reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller; the sine partner is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Named sub-stream derivation: all randomness flows from one root seed, and
/// every consumer hashes in a label plus optional indices.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
    std::uint64_t h = root ^ 0x243F6A8885A308D3ull;
    for (char c : label) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001B3ull;
    }
    std::uint64_t s = h;
    return splitmix64_next(s);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t a) {
    std::uint64_t s = derive_seed(root, label) ^ (a * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
    return splitmix64_next(s);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t a,
                                 std::uint64_t b) {
    std::uint64_t s = derive_seed(root, label, a) ^ (b * 0x9FB21C651E98DF25ull + 0x94D049BB133111EBull);
    return splitmix64_next(s);
}

}  // namespace trajedit
