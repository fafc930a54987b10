#pragma once

#include <span>
#include <vector>

#include "coevo/phylogeny.hpp"
#include "coevo/rng.hpp"

namespace coevo {

struct FitnessRecord {
    TaxonId taxon;
    double aggregate = 0.0;             // mean(per_opponent) + bonus
    std::vector<double> per_opponent;  // evaluated or estimated scores
    double bonus = 0.0;
};

FitnessRecord make_fitness_record(TaxonId taxon, std::vector<double> per_opponent, double bonus = 0.0);

/// The `n_parents` highest aggregates; ties go to the lower id.
std::vector<TaxonId> truncate(std::span<const FitnessRecord> records, std::size_t n_parents);

/// Roulette-wheel draws with replacement; uniform when every aggregate is 0.
std::vector<TaxonId> fitness_proportional(std::span<const FitnessRecord> survivors, std::size_t n_offspring,
                                          Rng& rng);

/// One lexicase selection event. Tests are the per-opponent scores plus,
/// when `bonus_as_test` is set, the bonus as one more test case.
TaxonId lexicase(std::span<const FitnessRecord> survivors, Rng& rng, bool bonus_as_test = false);

}  // namespace coevo
