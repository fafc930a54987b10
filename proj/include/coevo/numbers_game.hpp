#pragma once

#include <array>
#include <span>
#include <string_view>

#include "coevo/rng.hpp"

namespace coevo {

/// Three-dimensional real-valued Numbers Game genome.
struct NumbersGenome {
    std::array<double, 3> dims{0.0, 0.0, 0.0};

    friend bool operator==(const NumbersGenome&, const NumbersGenome&) = default;
};

enum class NumbersVariant { CompareOnOne, CompareOnAll };

std::string_view to_string(NumbersVariant v);

inline constexpr double kNumbersNoise = 0.1;

/// Adds independent uniform(-0.1, 0.1) noise to two distinct random
/// dimensions.
NumbersGenome mutate_numbers(const NumbersGenome& g, Rng& rng);

/// 1 iff a_i >= b_i in every dimension.
int compare_on_all(const NumbersGenome& a, const NumbersGenome& b) noexcept;

/// 1 iff a_j >= b_j where j is b's largest dimension (lowest index on ties).
int compare_on_one(const NumbersGenome& a, const NumbersGenome& b) noexcept;

int play_numbers(NumbersVariant v, const NumbersGenome& a, const NumbersGenome& b) noexcept;

/// Mean over individuals of the sum of their dimensions. Throws
/// std::invalid_argument on an empty population.
double mean_genotype_sum(std::span<const NumbersGenome> population);

/// True when one population wins every interaction against the other and
/// loses none of the reverse ones, so every outcome is fixed and selection
/// sees no gradient.
bool detect_disconnect(std::span<const NumbersGenome> pop_a, std::span<const NumbersGenome> pop_b,
                       NumbersVariant v);

}  // namespace coevo
