#include "coevo/sorting_network.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coevo {

Swap Swap::from_channels(int first, int second) {
    if (first < 1 || first > kChannels || second < 1 || second > kChannels || first == second) {
        throw std::invalid_argument("invalid swap " + std::to_string(first) + ":" + std::to_string(second));
    }
    const auto lo = static_cast<std::uint8_t>(std::min(first, second) - 1);
    const auto hi = static_cast<std::uint8_t>(std::max(first, second) - 1);
    return Swap{lo, hi};
}

std::array<int, kChannels> apply_network(const SortingNetwork& net, const Parasite& input) {
    std::array<int, kChannels> v = input;
    for (const Swap& s : net.swaps) {
        if (v[s.lo] > v[s.hi]) std::swap(v[s.lo], v[s.hi]);
    }
    return v;
}

SortingScore score_interaction(const SortingNetwork& net, const Parasite& p) {
    const auto out = apply_network(net, p);
    std::array<int, kChannels> target = p;
    std::sort(target.begin(), target.end());
    int matches = 0;
    for (std::size_t i = 0; i < out.size(); ++i) matches += out[i] == target[i] ? 1 : 0;
    return {matches, kMaxScore - matches};
}

double size_bonus(std::size_t swap_count) noexcept {
    if (swap_count <= 60) return 1.0;
    if (swap_count >= 120) return 0.0;
    return (120.0 - static_cast<double>(swap_count)) / 60.0;
}

Swap random_swap(Rng& rng) {
    std::uniform_int_distribution<int> channel(0, kChannels - 1);
    std::uniform_int_distribution<int> other(0, kChannels - 2);
    const int a = channel(rng);
    int b = other(rng);
    if (b >= a) ++b;
    return Swap{static_cast<std::uint8_t>(std::min(a, b)), static_cast<std::uint8_t>(std::max(a, b))};
}

SortingNetwork mutate_network(const SortingNetwork& net, Rng& rng, NetworkMutationTrace* trace) {
    std::bernoulli_distribution fires(0.25);
    auto index = [&rng](std::size_t bound_inclusive) {
        return std::uniform_int_distribution<std::size_t>(0, bound_inclusive)(rng);
    };
    NetworkMutationTrace t;
    SortingNetwork out = net;
    auto& s = out.swaps;

    if (fires(rng)) {
        const std::size_t pos = index(s.size());
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), random_swap(rng));
        t.added = true;
    }
    if (fires(rng)) {
        if (s.size() > 1) {
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(index(s.size() - 1)));
            t.removed = true;
        }
    }
    if (fires(rng) && !s.empty()) {
        const std::size_t from = index(s.size() - 1);
        const Swap moving = s[from];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(from));
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(index(s.size())), moving);
        t.moved = true;
    }
    if (fires(rng) && !s.empty()) {
        s[index(s.size() - 1)] = random_swap(rng);
        t.rewired = true;
    }
    if (trace) *trace = t;
    return out;
}

Parasite mutate_parasite(const Parasite& p, Rng& rng) {
    std::uniform_int_distribution<std::size_t> first(0, kChannels - 1);
    std::uniform_int_distribution<std::size_t> second(0, kChannels - 2);
    const std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    Parasite out = p;
    std::swap(out[i], out[j]);
    return out;
}

SortingNetwork random_network(Rng& rng, std::size_t min_size, std::size_t max_size) {
    if (min_size == 0 || min_size > max_size) throw std::invalid_argument("random_network: bad size range");
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
    SortingNetwork net;
    net.swaps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) net.swaps.push_back(random_swap(rng));
    return net;
}

Parasite random_parasite(Rng& rng) {
    Parasite p;
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

bool verify_network(const SortingNetwork& net) {
    // 64 binary inputs per word. Within a word the low six input bits vary
    // with the bit position; the upper ten are fixed by the word index.
    static constexpr std::array<std::uint64_t, 6> kLowPatterns = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    constexpr std::uint32_t kWords = (1u << kChannels) / 64;
    std::array<std::uint64_t, kChannels> ch{};
    for (std::uint32_t w = 0; w < kWords; ++w) {
        for (int i = 0; i < 6; ++i) ch[static_cast<std::size_t>(i)] = kLowPatterns[static_cast<std::size_t>(i)];
        for (int i = 6; i < kChannels; ++i) ch[static_cast<std::size_t>(i)] = ((w >> (i - 6)) & 1u) ? ~0ULL : 0ULL;
        for (const Swap& s : net.swaps) {
            const std::uint64_t lo = ch[s.lo];
            const std::uint64_t hi = ch[s.hi];
            ch[s.lo] = lo & hi;
            ch[s.hi] = lo | hi;
        }
        for (std::size_t i = 0; i + 1 < kChannels; ++i) {
            if (ch[i] & ~ch[i + 1]) return false;
        }
    }
    return true;
}

std::string format_network(const SortingNetwork& net) {
    std::string out;
    for (std::size_t i = 0; i < net.swaps.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(net.swaps[i].lo + 1) + ':' + std::to_string(net.swaps[i].hi + 1);
    }
    return out;
}

SortingNetwork parse_network(std::string_view text) {
    SortingNetwork net;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto colon = token.find(':');
        int first = 0;
        int second = 0;
        bool ok = colon != std::string::npos;
        if (ok) {
            const char* begin = token.data();
            const char* mid = begin + colon;
            const char* end = begin + token.size();
            auto r1 = std::from_chars(begin, mid, first);
            auto r2 = std::from_chars(mid + 1, end, second);
            ok = r1.ec == std::errc{} && r1.ptr == mid && r2.ec == std::errc{} && r2.ptr == end;
        }
        if (!ok) throw std::invalid_argument("malformed swap token '" + token + "' (expected lo:hi)");
        try {
            net.swaps.push_back(Swap::from_channels(first, second));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("swap token '" + token + "' must name two distinct channels in 1..16");
        }
    }
    if (net.swaps.empty()) throw std::invalid_argument("network has no swaps");
    return net;
}

}  // namespace coevo
