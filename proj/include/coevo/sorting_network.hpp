#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coevo/rng.hpp"

namespace coevo {

inline constexpr int kChannels = 16;
inline constexpr int kMaxScore = kChannels;

/// Compare-exchange on two channels, stored 0-based with lo < hi.
struct Swap {
    std::uint8_t lo = 0;
    std::uint8_t hi = 1;

    /// From 1-based channel numbers in either order. Throws
    /// std::invalid_argument unless both lie in 1..16 and differ.
    static Swap from_channels(int first, int second);

    friend bool operator==(const Swap&, const Swap&) = default;
};

struct SortingNetwork {
    std::vector<Swap> swaps;

    std::size_t size() const noexcept { return swaps.size(); }
    friend bool operator==(const SortingNetwork&, const SortingNetwork&) = default;
};

/// A permutation of 0..15 the networks must sort.
using Parasite = std::array<int, kChannels>;

std::array<int, kChannels> apply_network(const SortingNetwork& net, const Parasite& input);

struct SortingScore {
    int network = 0;   // output positions already holding their sorted value
    int parasite = 0;  // 16 - network
};

SortingScore score_interaction(const SortingNetwork& net, const Parasite& p);

/// 1 at or below 60 swaps, 0 at or above 120, linear in between.
double size_bonus(std::size_t swap_count) noexcept;

/// Which of the four mutation operators fired.
struct NetworkMutationTrace {
    bool added = false;
    bool removed = false;
    bool moved = false;
    bool rewired = false;
};

/// Each operator (add, remove, move, rewire a swap's channels) fires
/// independently with probability 1/4. Removal is skipped when it would
/// leave the network empty.
SortingNetwork mutate_network(const SortingNetwork& net, Rng& rng, NetworkMutationTrace* trace = nullptr);

/// Exchanges two distinct random positions.
Parasite mutate_parasite(const Parasite& p, Rng& rng);

Swap random_swap(Rng& rng);
SortingNetwork random_network(Rng& rng, std::size_t min_size, std::size_t max_size);
Parasite random_parasite(Rng& rng);

/// True iff the network sorts all 2^16 binary inputs, and hence every input.
bool verify_network(const SortingNetwork& net);

/// Whitespace-separated 1-based `lo:hi` pairs.
std::string format_network(const SortingNetwork& net);
/// Throws std::invalid_argument naming the offending token.
SortingNetwork parse_network(std::string_view text);

}  // namespace coevo
