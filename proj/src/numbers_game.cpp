#include "coevo/numbers_game.hpp"

#include <algorithm>
#include <stdexcept>

namespace coevo {

std::string_view to_string(NumbersVariant v) {
    return v == NumbersVariant::CompareOnOne ? "compare-on-one" : "compare-on-all";
}

NumbersGenome mutate_numbers(const NumbersGenome& g, Rng& rng) {
    std::uniform_int_distribution<int> skip(0, 2);
    std::uniform_real_distribution<double> noise(-kNumbersNoise, kNumbersNoise);
    const int untouched = skip(rng);
    NumbersGenome out = g;
    for (int i = 0; i < 3; ++i) {
        if (i != untouched) out.dims[static_cast<std::size_t>(i)] += noise(rng);
    }
    return out;
}

int compare_on_all(const NumbersGenome& a, const NumbersGenome& b) noexcept {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(a.dims[i] >= b.dims[i])) return 0;
    }
    return 1;
}

int compare_on_one(const NumbersGenome& a, const NumbersGenome& b) noexcept {
    // max_element returns the first maximum, i.e. the lowest index on ties.
    const auto j = static_cast<std::size_t>(std::max_element(b.dims.begin(), b.dims.end()) - b.dims.begin());
    return a.dims[j] >= b.dims[j] ? 1 : 0;
}

int play_numbers(NumbersVariant v, const NumbersGenome& a, const NumbersGenome& b) noexcept {
    return v == NumbersVariant::CompareOnAll ? compare_on_all(a, b) : compare_on_one(a, b);
}

double mean_genotype_sum(std::span<const NumbersGenome> population) {
    if (population.empty()) throw std::invalid_argument("mean_genotype_sum: empty population");
    double total = 0.0;
    for (const auto& g : population) total += g.dims[0] + g.dims[1] + g.dims[2];
    return total / static_cast<double>(population.size());
}

bool detect_disconnect(std::span<const NumbersGenome> pop_a, std::span<const NumbersGenome> pop_b,
                       NumbersVariant v) {
    if (pop_a.empty() || pop_b.empty()) return false;
    auto dominates = [v](std::span<const NumbersGenome> winners, std::span<const NumbersGenome> losers) {
        for (const auto& w : winners) {
            for (const auto& l : losers) {
                if (play_numbers(v, w, l) != 1 || play_numbers(v, l, w) != 0) return false;
            }
        }
        return true;
    };
    return dominates(pop_a, pop_b) || dominates(pop_b, pop_a);
}

}  // namespace coevo
