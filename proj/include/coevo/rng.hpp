#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace coevo {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed of the `index`-th trial under a root seed.
constexpr std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(root) ^ splitmix64(index + 0x51ed2701ULL));
}

/// Independent generator for one named concern ("mutation", "selection", ...)
/// of a trial. Streams never share state, so the order in which concerns
/// draw numbers cannot leak between them.
inline Rng named_stream(std::uint64_t seed, std::string_view name) {
    const std::uint64_t s = splitmix64(seed ^ fnv1a(name));
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
    return Rng(seq);
}

}  // namespace coevo
