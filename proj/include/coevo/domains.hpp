#pragma once

#include <span>
#include <string>
#include <vector>

#include "coevo/numbers_game.hpp"
#include "coevo/outcome_store.hpp"
#include "coevo/sorting_network.hpp"

namespace coevo {

template <class Genome>
struct Individual {
    TaxonId id;
    Genome genome;
    bool is_parent = false;
};

enum class SelectionScheme { FitnessProportional, Lexicase };

/// Both Numbers Game variants. Population A and B hold the same genome type.
class NumbersDomain {
public:
    using GenomeA = NumbersGenome;
    using GenomeB = NumbersGenome;

    explicit NumbersDomain(NumbersVariant variant) : variant_(variant) {}

    NumbersVariant variant() const noexcept { return variant_; }
    OutcomeRange outcome_range() const noexcept { return {0.0, 1.0}; }
    SelectionScheme selection() const noexcept { return SelectionScheme::FitnessProportional; }
    bool bonus_as_test() const noexcept { return false; }

    // Everyone starts at the origin.
    GenomeA initial_a(Rng&) const { return {}; }
    GenomeB initial_b(Rng&) const { return {}; }

    Outcome play(const GenomeA& a, const GenomeB& b) const;

    GenomeA mutate_a(const GenomeA& g, Rng& rng) const { return mutate_numbers(g, rng); }
    GenomeB mutate_b(const GenomeB& g, Rng& rng) const { return mutate_numbers(g, rng); }

    double bonus_a(const GenomeA&, std::span<const double>) const { return 0.0; }
    double bonus_b(const GenomeB&, std::span<const double>) const { return 0.0; }

    static std::vector<std::string> metric_names();
    std::vector<double> metrics(std::span<const Individual<GenomeA>> pop_a,
                                std::span<const Individual<GenomeB>> pop_b) const;

private:
    NumbersVariant variant_;
};

/// Sorting networks (population A) against parasites (population B).
class SortingDomain {
public:
    using GenomeA = SortingNetwork;
    using GenomeB = Parasite;

    SortingDomain(std::size_t init_min_size, std::size_t init_max_size, bool bonus_as_test)
        : init_min_(init_min_size), init_max_(init_max_size), bonus_as_test_(bonus_as_test) {}

    OutcomeRange outcome_range() const noexcept { return {0.0, static_cast<double>(kMaxScore)}; }
    SelectionScheme selection() const noexcept { return SelectionScheme::Lexicase; }
    bool bonus_as_test() const noexcept { return bonus_as_test_; }

    GenomeA initial_a(Rng& rng) const { return random_network(rng, init_min_, init_max_); }
    GenomeB initial_b(Rng& rng) const { return random_parasite(rng); }

    Outcome play(const GenomeA& net, const GenomeB& parasite) const;

    GenomeA mutate_a(const GenomeA& g, Rng& rng) const { return mutate_network(g, rng); }
    GenomeB mutate_b(const GenomeB& g, Rng& rng) const { return mutate_parasite(g, rng); }

    /// Size bonus for networks whose whole outcome row is a perfect score.
    double bonus_a(const GenomeA& net, std::span<const double> row) const;
    double bonus_b(const GenomeB&, std::span<const double>) const { return 0.0; }

    static std::vector<std::string> metric_names();
    /// Percentage of verified-perfect networks and the swap count of the
    /// smallest one (NaN when there is none).
    std::vector<double> metrics(std::span<const Individual<GenomeA>> pop_a,
                                std::span<const Individual<GenomeB>> pop_b) const;

private:
    std::size_t init_min_;
    std::size_t init_max_;
    bool bonus_as_test_;
};

}  // namespace coevo
