#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mcd {

// All seeded randomness in the project is derived from raw std::mt19937
// 32-bit outputs. The standard pins the mt19937 bit stream, but not the
// distribution adaptors, so uniform/Bernoulli draws are hand-rolled here
// to keep corpora byte-identical across platforms.

// Uniform integer in [0, bound) by masked rejection; bound >= 1.
inline std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t bound) {
    if (bound <= 1) return 0;
    std::uint32_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    for (;;) {
        std::uint32_t x = rng() & mask;
        if (x < bound) return x;
    }
}

// Accepts when the next 32-bit draw falls below floor(p * 2^32).
inline bool bernoulli(std::mt19937& rng, double p) {
    if (p <= 0.0) { rng(); return false; }
    if (p >= 1.0) { rng(); return true; }
    auto threshold = std::uint64_t(p * 4294967296.0);
    return rng() < threshold;
}

// Uniform double in [0,1) with 32-bit resolution.
inline double uniform_unit(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

// Fisher-Yates, descending index, uniform_below for each swap.
template <class T>
void shuffle_deterministic(std::vector<T>& items, std::mt19937& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, std::uint32_t(i));
        std::swap(items[i - 1], items[j]);
    }
}

// Stable per-item seed stream for corpus generation.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t x = base + 0x9e3779b97f4a7c15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

} // namespace mcd
