#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "coevo/sorting_network.hpp"
#include "oracles.hpp"

using namespace coevo;

namespace {

Parasite sorted_parasite() {
    Parasite p{};
    std::iota(p.begin(), p.end(), 0);
    return p;
}

int position_matches(const std::array<int, kChannels>& out) {
    int n = 0;
    for (int i = 0; i < kChannels; ++i) n += out[static_cast<std::size_t>(i)] == i;
    return n;
}

}  // namespace

TEST_CASE("swaps normalise channel order") {
    CHECK(Swap::from_channels(3, 1) == Swap{0, 2});
    CHECK_THROWS_AS(Swap::from_channels(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(Swap::from_channels(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Swap::from_channels(1, 17), std::invalid_argument);
}

TEST_CASE("applying networks") {
    SortingNetwork adjacent;
    for (int i = 1; i < 16; ++i) adjacent.swaps.push_back(Swap::from_channels(i, i + 1));
    CHECK(apply_network(adjacent, sorted_parasite()) == sorted_parasite());

    Parasite one_inversion = sorted_parasite();
    std::swap(one_inversion[0], one_inversion[1]);
    const SortingNetwork single{{Swap::from_channels(1, 2)}};
    CHECK(apply_network(single, one_inversion) == sorted_parasite());
}

TEST_CASE("scores are position matches and sum to sixteen") {
    const SortingNetwork single{{Swap::from_channels(1, 2)}};
    CHECK(score_interaction(single, sorted_parasite()).network == 16);
    CHECK(score_interaction(single, sorted_parasite()).parasite == 0);

    Parasite reversed{};
    for (int i = 0; i < 16; ++i) reversed[static_cast<std::size_t>(i)] = 15 - i;
    const SortingNetwork far{{Swap::from_channels(1, 16)}};
    // Swapping the end channels of a reversed input fixes exactly those two.
    CHECK(score_interaction(far, reversed).network == 2);

    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
        const auto net = random_network(rng, 1, 40);
        const auto p = random_parasite(rng);
        const auto out = apply_network(net, p);
        auto a = out;
        auto b = p;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        const auto s = score_interaction(net, p);
        CHECK(s.network == position_matches(out));
        CHECK(s.network + s.parasite == 16);
    }
}

TEST_CASE("size bonus") {
    CHECK(size_bonus(60) == 1.0);
    CHECK(size_bonus(10) == 1.0);
    CHECK(size_bonus(120) == 0.0);
    CHECK(size_bonus(500) == 0.0);
    CHECK(size_bonus(90) == doctest::Approx(0.5));
    for (std::size_t s = 1; s < 200; ++s) {
        CHECK(size_bonus(s + 1) <= size_bonus(s));
        CHECK(std::abs(size_bonus(s + 1) - size_bonus(s)) <= 1.0 / 60 + 1e-12);
    }
}

TEST_CASE("batcher network verifies and agrees with the scalar oracle") {
    const auto batcher = testing::batcher16();
    CHECK(batcher.size() == 63);
    CHECK(verify_network(batcher));
    CHECK(testing::sorts_all_binary(batcher));

    Rng rng(12);
    for (int t = 0; t < 1000; ++t) CHECK(score_interaction(batcher, random_parasite(rng)).network == 16);

    const SortingNetwork single{{Swap::from_channels(1, 2)}};
    CHECK_FALSE(verify_network(single));

    // Knocking out any one comparator breaks it.
    for (std::size_t drop = 0; drop < batcher.size(); drop += 9) {
        auto broken = batcher;
        broken.swaps.erase(broken.swaps.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(verify_network(broken) == testing::sorts_all_binary(broken));
    }
    for (int t = 0; t < 20; ++t) {
        const auto net = random_network(rng, 60, 120);
        CHECK(verify_network(net) == testing::sorts_all_binary(net));
    }
}

TEST_CASE("network mutation operators fire a quarter of the time") {
    Rng rng(99);
    const int n = 100000;
    int added = 0;
    int removed = 0;
    int moved = 0;
    int rewired = 0;
    auto net = random_network(rng, 60, 80);
    for (int i = 0; i < n; ++i) {
        NetworkMutationTrace trace;
        const auto child = mutate_network(net, rng, &trace);
        added += trace.added;
        removed += trace.removed;
        moved += trace.moved;
        rewired += trace.rewired;
        const auto diff = static_cast<long>(child.size()) - static_cast<long>(net.size());
        CHECK(diff >= -1);
        CHECK(diff <= 1);
        CHECK(diff == static_cast<long>(trace.added) - static_cast<long>(trace.removed));
        CHECK(child.size() >= 1);
        for (const auto& s : child.swaps) CHECK((s.lo < s.hi && s.hi < kChannels));
    }
    for (int count : {added, removed, moved, rewired}) CHECK(std::abs(static_cast<double>(count) / n - 0.25) <= 0.005);
}

TEST_CASE("removal never empties a network") {
    Rng rng(1);
    SortingNetwork net{{Swap::from_channels(1, 2)}};
    for (int i = 0; i < 1000; ++i) {
        net = mutate_network(net, rng);
        CHECK(net.size() >= 1);
    }
}

TEST_CASE("parasite mutation is a transposition") {
    Rng rng(3);
    const auto base = sorted_parasite();
    auto p = base;
    for (int i = 0; i < 10000; ++i) {
        const auto next = mutate_parasite(p, rng);
        int differ = 0;
        for (int k = 0; k < 16; ++k) differ += next[static_cast<std::size_t>(k)] != p[static_cast<std::size_t>(k)];
        CHECK(differ == 2);
        auto s = next;
        std::sort(s.begin(), s.end());
        CHECK(s == base);
        p = next;
    }
}

TEST_CASE("random initial genomes") {
    Rng rng(6);
    for (int i = 0; i < 500; ++i) {
        const auto net = random_network(rng, 60, 80);
        CHECK(net.size() >= 60);
        CHECK(net.size() <= 80);
        auto p = random_parasite(rng);
        std::sort(p.begin(), p.end());
        CHECK(p == sorted_parasite());
    }
}

TEST_CASE("text round trip") {
    const auto batcher = testing::batcher16();
    const auto text = format_network(batcher);
    CHECK(text.rfind("1:2 ", 0) == 0);
    CHECK(parse_network(text) == batcher);
    CHECK(parse_network("  1:2\n3:4\t16:15 ") == SortingNetwork{{Swap{0, 1}, Swap{2, 3}, Swap{14, 15}}});
    CHECK_THROWS_AS(parse_network("1:2 3-4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_network("1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_network(""), std::invalid_argument);
}
