#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace ddsim {

/// SplitMix64 output function (Steele, Lea & Flood).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a, used to turn stream tags into integers.
constexpr std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed of the sub-stream (`tag`, `index`) under `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
    return mix64(master ^ mix64(fnv1a(tag) + mix64(index + 0x9E3779B97F4A7C15ULL)));
}

/// Counter-based generator: the n-th output (n = 1, 2, ...) is
/// mix64(key + n * 0x9E3779B97F4A7C15). Any stream can be reproduced from its
/// key and position alone, so ports only need mix64 and 64-bit wrap-around
/// arithmetic.
///
/// Real-valued draws:
///   uniform()      = (next() >> 11) * 2^-53                  in [0, 1)
///   uniform_pos()  = ((next() >> 11) + 1) * 2^-53            in (0, 1]
///   normal()       = sqrt(-2 ln u1) * cos(2 pi u2), u1 = uniform_pos(), u2 = uniform()
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t key) : key_(key) {}
    static Rng stream(std::uint64_t master, std::string_view tag, std::uint64_t index = 0) {
        return Rng(derive_seed(master, tag, index));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

    std::uint64_t next() {
        ++counter_;
        return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
    double normal();

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ddsim
