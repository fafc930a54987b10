#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "coevo/numbers_game.hpp"

using namespace coevo;

namespace {

NumbersGenome g(double x, double y, double z) { return NumbersGenome{{x, y, z}}; }

}  // namespace

TEST_CASE("compare on all") {
    CHECK(compare_on_all(g(1, 1, 1), g(0, 0, 0)) == 1);
    CHECK(compare_on_all(g(1, 0, 1), g(0, 1, 0)) == 0);
    CHECK(compare_on_all(g(0.3, 0.2, 0.1), g(0.3, 0.2, 0.1)) == 1);
}

TEST_CASE("compare on one") {
    const auto b = g(0.2, 0.5, 0.1);
    CHECK(compare_on_one(g(0, 0.5, 0), b) == 1);
    CHECK(compare_on_one(g(0.9, 0.4, 0.9), b) == 0);
    CHECK(compare_on_one(b, b) == 1);
    // Ties in b go to the lowest index.
    CHECK(compare_on_one(g(1, 0, 0), g(0.5, 0.5, 0.5)) == 1);
    CHECK(compare_on_one(g(0, 1, 1), g(0.5, 0.5, 0.5)) == 0);
}

TEST_CASE("payoff properties on random genomes") {
    Rng rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> coarse(0, 2);
    for (int t = 0; t < 20000; ++t) {
        // Coarse values make equal genomes common enough to matter.
        const auto a = t % 2 ? g(u(rng), u(rng), u(rng)) : g(coarse(rng), coarse(rng), coarse(rng));
        const auto b = t % 2 ? g(u(rng), u(rng), u(rng)) : g(coarse(rng), coarse(rng), coarse(rng));
        CHECK((compare_on_all(a, b) == 1 && compare_on_all(b, a) == 1) == (a == b));

        int j = 0;
        for (int d = 1; d < 3; ++d) {
            if (b.dims[d] > b.dims[j]) j = d;
        }
        auto shifted = a;
        for (int d = 0; d < 3; ++d) {
            if (d != j) shifted.dims[d] += u(rng);
        }
        CHECK(compare_on_one(a, b) == compare_on_one(shifted, b));
        CHECK(compare_on_one(a, b) == (a.dims[j] >= b.dims[j] ? 1 : 0));
    }
}

TEST_CASE("mean genotype sum") {
    CHECK(mean_genotype_sum(std::vector<NumbersGenome>{g(0, 0, 0)}) == 0.0);
    CHECK(mean_genotype_sum(std::vector<NumbersGenome>{g(1, 2, 3)}) == 6.0);
    CHECK(mean_genotype_sum(std::vector<NumbersGenome>{g(1, 1, 1), g(0, 0, 0)}) == 1.5);
    CHECK_THROWS_AS(mean_genotype_sum(std::vector<NumbersGenome>{}), std::invalid_argument);
}

TEST_CASE("mutation touches two dimensions with bounded, unbiased noise") {
    Rng rng(19);
    const auto base = g(0.5, -0.5, 2.0);
    const int n = 100000;
    int touched[3] = {0, 0, 0};
    double drift[3] = {0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const auto m = mutate_numbers(base, rng);
        int changed = 0;
        for (int d = 0; d < 3; ++d) {
            const double delta = m.dims[d] - base.dims[d];
            CHECK(std::abs(delta) <= kNumbersNoise);
            if (delta != 0.0) {
                ++changed;
                ++touched[d];
            }
            drift[d] += delta;
        }
        CHECK(changed <= 2);
    }
    for (int d = 0; d < 3; ++d) {
        CHECK(std::abs(static_cast<double>(touched[d]) / n - 2.0 / 3.0) <= 0.01);
        CHECK(std::abs(drift[d] / n) <= 0.002);
    }
}

TEST_CASE("disconnect detection") {
    const std::vector<NumbersGenome> high(10, g(5, 5, 5));
    const std::vector<NumbersGenome> low(10, g(0, 0, 0));
    CHECK(detect_disconnect(high, low, NumbersVariant::CompareOnAll));
    CHECK(detect_disconnect(low, high, NumbersVariant::CompareOnAll));
    CHECK(detect_disconnect(high, low, NumbersVariant::CompareOnOne));

    const std::vector<NumbersGenome> mixed_a{g(1, 1, 1), g(0, 0, 0)};
    const std::vector<NumbersGenome> mixed_b{g(0.5, 0.5, 0.5)};
    CHECK_FALSE(detect_disconnect(mixed_a, mixed_b, NumbersVariant::CompareOnAll));

    // Identical populations draw every game, which is not a disconnect.
    CHECK_FALSE(detect_disconnect(low, low, NumbersVariant::CompareOnAll));

    Rng rng(31);
    std::uniform_real_distribution<double> u(0.0, 0.1);
    int fired = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<NumbersGenome> a(100);
        std::vector<NumbersGenome> b(100);
        for (auto& x : a) x = g(u(rng), u(rng), u(rng));
        for (auto& x : b) x = g(u(rng), u(rng), u(rng));
        fired += detect_disconnect(a, b, NumbersVariant::CompareOnAll);
    }
    CHECK(fired == 0);
}
