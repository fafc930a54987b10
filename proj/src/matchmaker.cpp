#include "coevo/matchmaker.hpp"

#include <algorithm>
#include <stdexcept>

namespace coevo {

namespace {

void finalize(MatchPlan& plan) {
    std::sort(plan.pairs.begin(), plan.pairs.end());
    plan.pairs.erase(std::unique(plan.pairs.begin(), plan.pairs.end()), plan.pairs.end());
}

std::vector<TaxonId> ids_where(std::span<const Member> pop, bool parents) {
    std::vector<TaxonId> out;
    for (const Member& m : pop) {
        if (m.is_parent == parents) out.push_back(m.id);
    }
    return out;
}

void require_nonempty(std::span<const Member> pop_a, std::span<const Member> pop_b, const char* who) {
    if (pop_a.empty() || pop_b.empty()) throw std::invalid_argument(std::string(who) + ": empty population");
}

}  // namespace

bool MatchPlan::contains(InteractionKey key) const {
    return std::binary_search(pairs.begin(), pairs.end(), key);
}

std::string_view to_string(MatchmakerKind kind) {
    switch (kind) {
        case MatchmakerKind::AllVsAll: return "all-vs-all";
        case MatchmakerKind::ParentsVsAll: return "parents-vs-all";
        case MatchmakerKind::RandomCohorts: return "random-cohorts";
        case MatchmakerKind::Mixed: return "mixed";
        case MatchmakerKind::ChildSubstitution: return "child-substitution";
    }
    return "unknown";
}

MatchmakerKind parse_matchmaker(std::string_view name) {
    for (auto kind : {MatchmakerKind::AllVsAll, MatchmakerKind::ParentsVsAll, MatchmakerKind::RandomCohorts,
                      MatchmakerKind::Mixed, MatchmakerKind::ChildSubstitution}) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown matchmaker '" + std::string(name) +
                                "' (expected all-vs-all, parents-vs-all, random-cohorts, mixed, child-substitution)");
}

std::vector<std::string> validate_matchmaker(const MatchmakerConfig& config, std::size_t pop_a, std::size_t parents_a,
                                             std::size_t pop_b, std::size_t parents_b) {
    std::vector<std::string> problems;
    switch (config.kind) {
        case MatchmakerKind::RandomCohorts:
            if (config.cohort_size == 0) {
                problems.push_back("cohort_size must be positive");
                break;
            }
            if (pop_a % config.cohort_size != 0 || pop_b % config.cohort_size != 0) {
                problems.push_back("cohort_size " + std::to_string(config.cohort_size) +
                                   " does not divide the population sizes (" + std::to_string(pop_a) + ", " +
                                   std::to_string(pop_b) + ")");
            } else if (pop_a / config.cohort_size != pop_b / config.cohort_size) {
                problems.push_back("random-cohorts needs the same number of cohorts in both populations");
            }
            break;
        case MatchmakerKind::Mixed:
            if (!(config.p_all >= 0.0 && config.p_all <= 1.0)) problems.push_back("p_all must lie in [0, 1]");
            break;
        case MatchmakerKind::ChildSubstitution: {
            const std::size_t c = config.substitution_children;
            if (c > parents_a || c > parents_b) {
                problems.push_back("substitution_children " + std::to_string(c) +
                                   " exceeds the number of parents");
            }
            if (c > pop_a - parents_a || c > pop_b - parents_b) {
                problems.push_back("substitution_children " + std::to_string(c) +
                                   " exceeds the number of children");
            }
            break;
        }
        case MatchmakerKind::AllVsAll:
        case MatchmakerKind::ParentsVsAll: break;
    }
    return problems;
}

MatchPlan all_versus_all(std::span<const Member> pop_a, std::span<const Member> pop_b) {
    require_nonempty(pop_a, pop_b, "all_versus_all");
    MatchPlan plan;
    plan.pairs.reserve(pop_a.size() * pop_b.size());
    for (const Member& a : pop_a) {
        for (const Member& b : pop_b) plan.pairs.push_back({a.id, b.id});
    }
    finalize(plan);
    return plan;
}

MatchPlan parents_versus_all(std::span<const Member> pop_a, std::span<const Member> pop_b) {
    require_nonempty(pop_a, pop_b, "parents_versus_all");
    const auto parents_a = ids_where(pop_a, true);
    const auto parents_b = ids_where(pop_b, true);
    if (parents_a.empty() || parents_b.empty()) {
        throw std::invalid_argument("parents_versus_all: a population has no parents");
    }
    MatchPlan plan;
    plan.pairs.reserve(pop_a.size() * parents_b.size() + pop_b.size() * parents_a.size());
    for (const Member& a : pop_a) {
        for (TaxonId b : parents_b) plan.pairs.push_back({a.id, b});
    }
    for (const Member& b : pop_b) {
        for (TaxonId a : parents_a) plan.pairs.push_back({a, b.id});
    }
    finalize(plan);
    return plan;
}

CohortAssignment assign_cohorts(std::span<const Member> pop_a, std::span<const Member> pop_b,
                                std::size_t cohort_size, Rng& rng, const PopulationPair& labels) {
    require_nonempty(pop_a, pop_b, "random_cohorts");
    if (cohort_size == 0 || pop_a.size() % cohort_size != 0 || pop_b.size() % cohort_size != 0 ||
        pop_a.size() != pop_b.size()) {
        throw std::invalid_argument("random_cohorts: cohort_size " + std::to_string(cohort_size) +
                                    " must divide both (equal) population sizes");
    }
    auto split = [&](std::span<const Member> pop) {
        std::vector<TaxonId> ids;
        for (const Member& m : pop) ids.push_back(m.id);
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<std::vector<TaxonId>> cohorts;
        for (std::size_t i = 0; i < ids.size(); i += cohort_size) {
            cohorts.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(i),
                                 ids.begin() + static_cast<std::ptrdiff_t>(i + cohort_size));
        }
        return cohorts;
    };
    CohortAssignment out;
    out.cohort_size = cohort_size;
    auto cohorts_a = split(pop_a);
    auto cohorts_b = split(pop_b);
    // Cohort i of A is paired with cohort i of B; shuffling B's cohort list
    // makes that a uniform random matching.
    std::shuffle(cohorts_b.begin(), cohorts_b.end(), rng);
    out.cohorts_per_population[labels.first] = std::move(cohorts_a);
    out.cohorts_per_population[labels.second] = std::move(cohorts_b);
    return out;
}

MatchPlan random_cohorts(std::span<const Member> pop_a, std::span<const Member> pop_b, std::size_t cohort_size,
                         Rng& rng) {
    const PopulationPair labels{};
    const CohortAssignment assignment = assign_cohorts(pop_a, pop_b, cohort_size, rng, labels);
    const auto& cohorts_a = assignment.cohorts_per_population.at(labels.first);
    const auto& cohorts_b = assignment.cohorts_per_population.at(labels.second);
    MatchPlan plan;
    plan.pairs.reserve(cohorts_a.size() * cohort_size * cohort_size);
    for (std::size_t c = 0; c < cohorts_a.size(); ++c) {
        for (TaxonId a : cohorts_a[c]) {
            for (TaxonId b : cohorts_b[c]) plan.pairs.push_back({a, b});
        }
    }
    finalize(plan);
    return plan;
}

MatchPlan mixed_pva_ava(std::span<const Member> pop_a, std::span<const Member> pop_b, double p_all, Rng& rng) {
    if (!(p_all >= 0.0 && p_all <= 1.0)) throw std::invalid_argument("mixed_pva_ava: p_all outside [0, 1]");
    std::bernoulli_distribution pick_all(p_all);
    return pick_all(rng) ? all_versus_all(pop_a, pop_b) : parents_versus_all(pop_a, pop_b);
}

MatchPlan child_substitution(std::span<const Member> pop_a, std::span<const Member> pop_b, std::size_t c, Rng& rng) {
    require_nonempty(pop_a, pop_b, "child_substitution");
    auto parents_a = ids_where(pop_a, true);
    auto parents_b = ids_where(pop_b, true);
    auto children_a = ids_where(pop_a, false);
    auto children_b = ids_where(pop_b, false);
    if (parents_a.empty() || parents_b.empty()) {
        throw std::invalid_argument("child_substitution: a population has no parents");
    }
    if (c > parents_a.size() || c > parents_b.size()) {
        throw std::invalid_argument("child_substitution: c exceeds the number of parents");
    }
    if (c > 0 && (c > children_a.size() || c > children_b.size())) {
        throw std::invalid_argument("child_substitution: c exceeds the number of children");
    }

    MatchPlan plan;
    for (TaxonId a : parents_a) {
        for (TaxonId b : parents_b) plan.pairs.push_back({a, b});
    }

    // Round-robin over shuffled orders: consecutive children take
    // consecutive blocks of opponents, which spreads games evenly.
    auto round_robin = [&](const std::vector<TaxonId>& players, std::vector<TaxonId> opponents, std::size_t per_player,
                           bool players_are_a) {
        if (per_player == 0 || opponents.empty()) return;
        std::shuffle(opponents.begin(), opponents.end(), rng);
        for (std::size_t i = 0; i < players.size(); ++i) {
            for (std::size_t t = 0; t < per_player; ++t) {
                const TaxonId o = opponents[(i * per_player + t) % opponents.size()];
                plan.pairs.push_back(players_are_a ? InteractionKey{players[i], o} : InteractionKey{o, players[i]});
            }
        }
    };
    std::shuffle(children_a.begin(), children_a.end(), rng);
    std::shuffle(children_b.begin(), children_b.end(), rng);
    round_robin(children_a, parents_b, parents_b.size() - c, true);
    round_robin(children_b, parents_a, parents_a.size() - c, false);
    // One block of c opposing children per A child; with equal child counts
    // every B child also lands in exactly c blocks.
    round_robin(children_a, children_b, c, true);

    finalize(plan);
    return plan;
}

MatchPlan make_plan(const MatchmakerConfig& config, std::span<const Member> pop_a, std::span<const Member> pop_b,
                    Rng& rng) {
    switch (config.kind) {
        case MatchmakerKind::AllVsAll: return all_versus_all(pop_a, pop_b);
        case MatchmakerKind::ParentsVsAll: return parents_versus_all(pop_a, pop_b);
        case MatchmakerKind::RandomCohorts: return random_cohorts(pop_a, pop_b, config.cohort_size, rng);
        case MatchmakerKind::Mixed: return mixed_pva_ava(pop_a, pop_b, config.p_all, rng);
        case MatchmakerKind::ChildSubstitution:
            return child_substitution(pop_a, pop_b, config.substitution_children, rng);
    }
    throw std::logic_error("make_plan: unhandled matchmaker");
}

}  // namespace coevo
