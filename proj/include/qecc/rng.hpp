#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace qecc {

// SplitMix64 finalizer, used as the seed-mixing primitive everywhere a
// seed is derived from several words (trial seeds, derived streams).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Folds words into one seed: h <- mix64(h ^ w) for each w in order.
constexpr std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (std::uint64_t w : words) h = mix64(h ^ w);
    return h;
}

// FNV-1a over bytes; stable tag for strings fed into mix_seed.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// xoshiro256** seeded through SplitMix64. Bounded draws use masked
// rejection, so sequences are bit-identical across platforms and
// independent of the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ull;
            word = scramble(sm);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound); returns 0 when bound <= 1.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
        for (;;) {
            const std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return next_unit() < p; }

    // Independent stream derived from this generator's original seed.
    Rng derive(std::uint64_t tag) const noexcept { return Rng(mix_seed({seed_, tag})); }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    static constexpr std::uint64_t scramble(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace qecc
