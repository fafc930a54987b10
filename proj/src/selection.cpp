#include "coevo/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coevo {

FitnessRecord make_fitness_record(TaxonId taxon, std::vector<double> per_opponent, double bonus) {
    const double mean = per_opponent.empty()
                            ? 0.0
                            : std::accumulate(per_opponent.begin(), per_opponent.end(), 0.0) /
                                  static_cast<double>(per_opponent.size());
    return FitnessRecord{taxon, mean + bonus, std::move(per_opponent), bonus};
}

std::vector<TaxonId> truncate(std::span<const FitnessRecord> records, std::size_t n_parents) {
    if (n_parents == 0) throw std::invalid_argument("truncate: n_parents must be positive");
    if (n_parents > records.size()) throw std::invalid_argument("truncate: n_parents exceeds population size");
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_parents), order.end(),
                      [&](std::size_t l, std::size_t r) {
                          if (records[l].aggregate != records[r].aggregate) {
                              return records[l].aggregate > records[r].aggregate;
                          }
                          return records[l].taxon < records[r].taxon;
                      });
    std::vector<TaxonId> out;
    out.reserve(n_parents);
    for (std::size_t i = 0; i < n_parents; ++i) out.push_back(records[order[i]].taxon);
    return out;
}

std::vector<TaxonId> fitness_proportional(std::span<const FitnessRecord> survivors, std::size_t n_offspring,
                                          Rng& rng) {
    if (survivors.empty()) throw std::invalid_argument("fitness_proportional: no survivors");
    std::vector<double> mass;
    mass.reserve(survivors.size());
    for (const auto& r : survivors) {
        if (r.aggregate < 0.0) throw std::invalid_argument("fitness_proportional: negative fitness");
        mass.push_back(r.aggregate);
    }
    const bool all_zero = std::all_of(mass.begin(), mass.end(), [](double m) { return m == 0.0; });
    if (all_zero) std::fill(mass.begin(), mass.end(), 1.0);

    std::discrete_distribution<std::size_t> wheel(mass.begin(), mass.end());
    std::vector<TaxonId> out;
    out.reserve(n_offspring);
    for (std::size_t i = 0; i < n_offspring; ++i) out.push_back(survivors[wheel(rng)].taxon);
    return out;
}

TaxonId lexicase(std::span<const FitnessRecord> survivors, Rng& rng, bool bonus_as_test) {
    if (survivors.empty()) throw std::invalid_argument("lexicase: no survivors");
    const std::size_t n_cases = survivors.front().per_opponent.size();
    for (const auto& r : survivors) {
        if (r.per_opponent.size() != n_cases) throw std::invalid_argument("lexicase: ragged score vectors");
    }
    const std::size_t total_cases = n_cases + (bonus_as_test ? 1 : 0);
    auto score = [&](std::size_t candidate, std::size_t test) {
        const FitnessRecord& r = survivors[candidate];
        return test < n_cases ? r.per_opponent[test] : r.bonus;
    };

    std::vector<std::size_t> tests(total_cases);
    std::iota(tests.begin(), tests.end(), std::size_t{0});
    std::shuffle(tests.begin(), tests.end(), rng);

    std::vector<std::size_t> pool(survivors.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t t : tests) {
        if (pool.size() == 1) break;
        double best = score(pool.front(), t);
        for (std::size_t c : pool) best = std::max(best, score(c, t));
        std::erase_if(pool, [&](std::size_t c) { return score(c, t) != best; });
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return survivors[pool[pick(rng)]].taxon;
}

}  // namespace coevo
