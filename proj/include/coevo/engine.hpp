#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coevo/config.hpp"
#include "coevo/domains.hpp"
#include "coevo/estimator.hpp"
#include "coevo/matchmaker.hpp"
#include "coevo/outcome_store.hpp"
#include "coevo/parallel.hpp"
#include "coevo/phylogeny.hpp"
#include "coevo/rng.hpp"
#include "coevo/selection.hpp"

namespace coevo {

struct GenerationStats {
    std::uint32_t generation = 0;
    std::uint64_t cumulative_evaluations = 0;  // budget axis: plan + fallback
    std::uint64_t plan_evaluations = 0;        // this generation
    std::uint64_t fallback_evaluations = 0;    // this generation
    std::uint64_t probe_evaluations = 0;       // cumulative, never on the budget axis
    std::size_t probes = 0;                    // this generation
    double probe_mean_error = 0.0;             // 0 when no probe ran
    std::vector<std::pair<std::string, double>> domain_metrics;
};

/// One co-evolutionary run. Each call to step() plays one generation:
///
///   plan -> evaluate (parallel) -> estimate the rest (parallel reads)
///   -> fallback evaluations -> probes -> fitness -> truncate -> select
///   -> mutate -> phylogeny update -> prune
///
/// Generation 0 is always evaluated all-versus-all to seed the store. The
/// whole run is a pure function of (config, seed); worker threads only fill
/// per-index slots.
template <class Domain>
class Trial {
public:
    using GenomeA = typename Domain::GenomeA;
    using GenomeB = typename Domain::GenomeB;

    Trial(Domain domain, ExperimentConfig config, std::uint64_t seed);

    GenerationStats step();
    bool finished() const noexcept { return cumulative_ >= config_.eval_budget; }

    std::uint32_t generation() const noexcept { return generation_; }
    std::uint64_t cumulative_evaluations() const noexcept { return cumulative_; }
    const std::vector<Individual<GenomeA>>& population_a() const noexcept { return pop_a_; }
    const std::vector<Individual<GenomeB>>& population_b() const noexcept { return pop_b_; }
    const Phylogeny& tree_a() const noexcept { return tree_a_; }
    const Phylogeny& tree_b() const noexcept { return tree_b_; }
    const OutcomeStore& store() const noexcept { return store_; }
    /// Plan used by the most recent step().
    const MatchPlan& last_plan() const noexcept { return plan_; }
    const Domain& domain() const noexcept { return domain_; }

private:
    struct Cell {
        Outcome value;
        bool resolved = false;
    };

    template <class G>
    static std::vector<Member> members(const std::vector<Individual<G>>& pop);
    template <class G>
    static std::vector<std::int32_t> index_by_id(const std::vector<Individual<G>>& pop, std::uint32_t bound);

    std::pair<std::size_t, double> run_probes(const std::vector<Cell>& matrix);

    template <class G, class Mutate>
    std::vector<Individual<G>> reproduce(std::vector<Individual<G>>& pop, Phylogeny& tree,
                                         const std::vector<FitnessRecord>& records, bool bonus_as_test,
                                         Mutate&& mutate);

    Domain domain_;
    ExperimentConfig config_;
    Rng init_rng_;
    Rng match_rng_;
    Rng selection_rng_;
    Rng mutation_rng_;
    Rng probe_rng_;
    Phylogeny tree_a_{"A"};
    Phylogeny tree_b_{"B"};
    OutcomeStore store_;
    std::vector<Individual<GenomeA>> pop_a_;
    std::vector<Individual<GenomeB>> pop_b_;
    MatchPlan plan_;
    std::vector<std::int32_t> index_a_;
    std::vector<std::int32_t> index_b_;
    std::uint32_t generation_ = 0;
    std::uint64_t cumulative_ = 0;
    std::uint64_t probe_cumulative_ = 0;
};

template <class Domain>
Trial<Domain>::Trial(Domain domain, ExperimentConfig config, std::uint64_t seed)
    : domain_(std::move(domain)),
      config_(std::move(config)),
      init_rng_(named_stream(seed, "init")),
      match_rng_(named_stream(seed, "matchmaking")),
      selection_rng_(named_stream(seed, "selection")),
      mutation_rng_(named_stream(seed, "mutation")),
      probe_rng_(named_stream(seed, "probes")),
      store_(domain_.outcome_range(), PopulationPair{"A", "B"}) {
    if (auto problems = validate(config_); !problems.empty()) throw ConfigError(std::move(problems));
    const std::size_t n = config_.population_size();
    for (std::size_t i = 0; i < n; ++i) {
        pop_a_.push_back({tree_a_.add_taxon(std::nullopt, 0), domain_.initial_a(init_rng_), false});
    }
    for (std::size_t i = 0; i < n; ++i) {
        pop_b_.push_back({tree_b_.add_taxon(std::nullopt, 0), domain_.initial_b(init_rng_), false});
    }
}

template <class Domain>
template <class G>
std::vector<Member> Trial<Domain>::members(const std::vector<Individual<G>>& pop) {
    std::vector<Member> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) out.push_back({ind.id, ind.is_parent});
    return out;
}

template <class Domain>
template <class G>
std::vector<std::int32_t> Trial<Domain>::index_by_id(const std::vector<Individual<G>>& pop, std::uint32_t bound) {
    std::vector<std::int32_t> index(bound, -1);
    for (std::size_t i = 0; i < pop.size(); ++i) index[pop[i].id.value] = static_cast<std::int32_t>(i);
    return index;
}

template <class Domain>
GenerationStats Trial<Domain>::step() {
    GenerationStats stats;
    stats.generation = generation_;
    const unsigned threads = config_.threads;
    const auto members_a = members(pop_a_);
    const auto members_b = members(pop_b_);
    index_a_ = index_by_id(pop_a_, tree_a_.id_bound());
    index_b_ = index_by_id(pop_b_, tree_b_.id_bound());
    auto play = [&](InteractionKey key) {
        return domain_.play(pop_a_[static_cast<std::size_t>(index_a_[key.a.value])].genome,
                            pop_b_[static_cast<std::size_t>(index_b_[key.b.value])].genome);
    };

    // Plan and evaluate.
    plan_ = generation_ == 0 ? all_versus_all(members_a, members_b)
                             : make_plan(config_.matchmaker, members_a, members_b, match_rng_);
    plan_.generation = generation_;
    std::vector<Outcome> evaluated(plan_.size());
    parallel_for(plan_.size(), threads, [&](std::size_t i) { evaluated[i] = play(plan_.pairs[i]); });
    for (std::size_t i = 0; i < plan_.size(); ++i) {
        store_.record(plan_.pairs[i], evaluated[i].score_a, evaluated[i].score_b);
    }
    stats.plan_evaluations = plan_.size();

    // Fill the full outcome matrix (rows: A, columns: B).
    const std::size_t na = pop_a_.size();
    const std::size_t nb = pop_b_.size();
    std::vector<Cell> matrix(na * nb);
    const EstimationContext ctx{tree_a_, tree_b_, store_, {config_.k_nearest, config_.horizon}};
    parallel_for(na, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < nb; ++j) {
            if (auto est = estimate_outcome(ctx, {pop_a_[i].id, pop_b_[j].id})) {
                matrix[i * nb + j] = Cell{Outcome{est->value_a, est->value_b, est->exact}, true};
            }
        }
    });
    std::vector<std::size_t> unresolved;
    for (std::size_t c = 0; c < matrix.size(); ++c) {
        if (!matrix[c].resolved) unresolved.push_back(c);
    }
    std::vector<Outcome> fallback(unresolved.size());
    parallel_for(unresolved.size(), threads, [&](std::size_t u) {
        const std::size_t c = unresolved[u];
        fallback[u] = play({pop_a_[c / nb].id, pop_b_[c % nb].id});
    });
    for (std::size_t u = 0; u < unresolved.size(); ++u) {
        const std::size_t c = unresolved[u];
        store_.record({pop_a_[c / nb].id, pop_b_[c % nb].id}, fallback[u].score_a, fallback[u].score_b);
        matrix[c] = Cell{fallback[u], true};
    }
    stats.fallback_evaluations = unresolved.size();
    cumulative_ += stats.plan_evaluations + stats.fallback_evaluations;
    stats.cumulative_evaluations = cumulative_;

    std::tie(stats.probes, stats.probe_mean_error) = run_probes(matrix);
    probe_cumulative_ += stats.probes;
    stats.probe_evaluations = probe_cumulative_;

    // Metrics describe the population these evaluations were spent on.
    const auto names = Domain::metric_names();
    const auto values = domain_.metrics(pop_a_, pop_b_);
    for (std::size_t m = 0; m < names.size(); ++m) stats.domain_metrics.emplace_back(names[m], values[m]);

    // Fitness from the mixed evaluated/estimated matrix.
    std::vector<FitnessRecord> records_a;
    std::vector<FitnessRecord> records_b;
    records_a.reserve(na);
    records_b.reserve(nb);
    for (std::size_t i = 0; i < na; ++i) {
        std::vector<double> row(nb);
        for (std::size_t j = 0; j < nb; ++j) row[j] = matrix[i * nb + j].value.score_a;
        const double bonus = domain_.bonus_a(pop_a_[i].genome, row);
        records_a.push_back(make_fitness_record(pop_a_[i].id, std::move(row), bonus));
    }
    for (std::size_t j = 0; j < nb; ++j) {
        std::vector<double> row(na);
        for (std::size_t i = 0; i < na; ++i) row[i] = matrix[i * nb + j].value.score_b;
        const double bonus = domain_.bonus_b(pop_b_[j].genome, row);
        records_b.push_back(make_fitness_record(pop_b_[j].id, std::move(row), bonus));
    }

    auto next_a = reproduce(pop_a_, tree_a_, records_a, domain_.bonus_as_test(),
                            [&](const GenomeA& g) { return domain_.mutate_a(g, mutation_rng_); });
    auto next_b = reproduce(pop_b_, tree_b_, records_b, false,
                            [&](const GenomeB& g) { return domain_.mutate_b(g, mutation_rng_); });
    pop_a_ = std::move(next_a);
    pop_b_ = std::move(next_b);

    tree_a_.prune(config_.horizon);
    tree_b_.prune(config_.horizon);
    store_.drop_missing(tree_a_, tree_b_);

    ++generation_;
    return stats;
}

template <class Domain>
template <class G, class Mutate>
std::vector<Individual<G>> Trial<Domain>::reproduce(std::vector<Individual<G>>& pop, Phylogeny& tree,
                                                    const std::vector<FitnessRecord>& records, bool bonus_as_test,
                                                    Mutate&& mutate) {
    auto survivor_ids = truncate(records, config_.n_parents);
    std::sort(survivor_ids.begin(), survivor_ids.end());

    std::vector<FitnessRecord> survivor_records;
    survivor_records.reserve(survivor_ids.size());
    for (const auto& r : records) {
        if (std::binary_search(survivor_ids.begin(), survivor_ids.end(), r.taxon)) survivor_records.push_back(r);
    }

    std::vector<TaxonId> reproducers;
    if (domain_.selection() == SelectionScheme::FitnessProportional) {
        reproducers = fitness_proportional(survivor_records, config_.n_children, selection_rng_);
    } else {
        reproducers.reserve(config_.n_children);
        for (std::size_t i = 0; i < config_.n_children; ++i) {
            reproducers.push_back(lexicase(survivor_records, selection_rng_, bonus_as_test));
        }
    }

    std::vector<Individual<G>> next;
    next.reserve(pop.size());
    std::vector<std::int32_t> slot(tree.id_bound(), -1);
    for (std::size_t i = 0; i < pop.size(); ++i) slot[pop[i].id.value] = static_cast<std::int32_t>(i);
    for (TaxonId id : survivor_ids) {
        Individual<G> parent = pop[static_cast<std::size_t>(slot[id.value])];
        parent.is_parent = true;
        next.push_back(std::move(parent));
    }
    for (TaxonId parent_id : reproducers) {
        const auto& parent = pop[static_cast<std::size_t>(slot[parent_id.value])];
        G child = mutate(parent.genome);
        next.push_back({tree.add_taxon(parent_id, generation_ + 1), std::move(child), false});
    }
    for (const auto& ind : pop) {
        if (!std::binary_search(survivor_ids.begin(), survivor_ids.end(), ind.id)) tree.mark_extinct(ind.id);
    }
    return next;
}

template <class Domain>
std::pair<std::size_t, double> Trial<Domain>::run_probes(const std::vector<Cell>& matrix) {
    const std::size_t nb = pop_b_.size();
    const bool want_planned = config_.probe_source == ProbeSource::EvaluatedChildren;
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < pop_a_.size(); ++i) {
        if (pop_a_[i].is_parent || generation_ == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (pop_b_[j].is_parent) continue;
            if (plan_.contains({pop_a_[i].id, pop_b_[j].id}) == want_planned) eligible.push_back(i * nb + j);
        }
    }
    // Partial Fisher-Yates: the first `take` entries become a uniform sample.
    const std::size_t take = std::min(eligible.size(), config_.probe_count);
    for (std::size_t t = 0; t < take; ++t) {
        std::uniform_int_distribution<std::size_t> pick(t, eligible.size() - 1);
        std::swap(eligible[t], eligible[pick(probe_rng_)]);
    }
    if (take == 0) return {0, 0.0};

    double total_error = 0.0;
    for (std::size_t t = 0; t < take; ++t) {
        const std::size_t c = eligible[t];
        const Outcome truth = domain_.play(pop_a_[c / nb].genome, pop_b_[c % nb].genome);
        const Outcome& seen = matrix[c].value;
        total_error += std::abs(seen.score_a - truth.score_a) + std::abs(seen.score_b - truth.score_b);
    }
    return {take, total_error / (2.0 * static_cast<double>(take))};
}

}  // namespace coevo
