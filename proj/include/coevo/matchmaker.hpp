#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/outcome_store.hpp"
#include "coevo/rng.hpp"

namespace coevo {

/// A population member as seen by a matchmaker.
struct Member {
    TaxonId id;
    bool is_parent = false;
};

/// Interactions designated for true evaluation in one generation.
/// `pairs` is sorted and duplicate-free.
struct MatchPlan {
    std::uint32_t generation = 0;
    std::vector<InteractionKey> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
    bool contains(InteractionKey key) const;
};

struct CohortAssignment {
    std::map<std::string, std::vector<std::vector<TaxonId>>> cohorts_per_population;
    std::size_t cohort_size = 0;
};

enum class MatchmakerKind { AllVsAll, ParentsVsAll, RandomCohorts, Mixed, ChildSubstitution };

std::string_view to_string(MatchmakerKind kind);
/// Throws std::invalid_argument for unknown names.
MatchmakerKind parse_matchmaker(std::string_view name);

struct MatchmakerConfig {
    MatchmakerKind kind = MatchmakerKind::ParentsVsAll;
    std::size_t cohort_size = 50;
    double p_all = 0.05;
    std::size_t substitution_children = 5;  // substitute children per parent
};

/// Configuration problems for the given population shapes, one message each.
std::vector<std::string> validate_matchmaker(const MatchmakerConfig& config, std::size_t pop_a, std::size_t parents_a,
                                             std::size_t pop_b, std::size_t parents_b);

MatchPlan all_versus_all(std::span<const Member> pop_a, std::span<const Member> pop_b);

/// Every member against every opposing parent; parent-parent pairs once.
MatchPlan parents_versus_all(std::span<const Member> pop_a, std::span<const Member> pop_b);

/// Splits both populations into random cohorts of `cohort_size`, pairs the
/// cohorts one-to-one at random and evaluates all-versus-all within pairs.
CohortAssignment assign_cohorts(std::span<const Member> pop_a, std::span<const Member> pop_b,
                                std::size_t cohort_size, Rng& rng, const PopulationPair& labels = {});
MatchPlan random_cohorts(std::span<const Member> pop_a, std::span<const Member> pop_b, std::size_t cohort_size,
                         Rng& rng);

/// all_versus_all with probability p_all, parents_versus_all otherwise.
MatchPlan mixed_pva_ava(std::span<const Member> pop_a, std::span<const Member> pop_b, double p_all, Rng& rng);

/// Parents play all parents. Each child plays P - c opposing parents and c
/// opposing children, assigned round-robin over shuffled orders so parents
/// (and children) all play equally often whenever the sizes divide evenly.
MatchPlan child_substitution(std::span<const Member> pop_a, std::span<const Member> pop_b, std::size_t c, Rng& rng);

MatchPlan make_plan(const MatchmakerConfig& config, std::span<const Member> pop_a, std::span<const Member> pop_b,
                    Rng& rng);

}  // namespace coevo
