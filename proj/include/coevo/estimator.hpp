#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coevo/outcome_store.hpp"
#include "coevo/phylogeny.hpp"

namespace coevo {

inline constexpr unsigned kDefaultHorizon = 10;
inline constexpr unsigned kDefaultNearest = 2;

struct NearInteraction {
    InteractionKey key;
    unsigned distance = 0;

    friend bool operator==(const NearInteraction&, const NearInteraction&) = default;
};

/// Up to `k` evaluated interactions closest to `query`, ordered by
/// (interaction distance, a id, b id).
///
/// Candidate pairs are expanded level by level in combined distance, where
/// each participant may be at most `horizon` edges from its counterpart in
/// the query. The search stops at the first level by which `k` evaluated
/// pairs have been found, or once every pair inside the horizon is
/// exhausted.
std::vector<NearInteraction> k_nearest_evaluated(const Phylogeny& tree_a, const Phylogeny& tree_b,
                                                 const OutcomeStore& store, InteractionKey query, unsigned k,
                                                 unsigned horizon = kDefaultHorizon);

/// Convex weights for a support set: w_j = (D - d_j) / D with D the summed
/// distance, divided by (n - 1) so they sum to one for any support size.
/// A single-element support gets weight 1. Throws std::invalid_argument on an
/// empty list or when every distance is zero.
std::vector<double> interaction_weights(std::span<const unsigned> distances);

struct Estimate {
    double value_a = 0.0;
    double value_b = 0.0;
    std::vector<NearInteraction> support;
    bool exact = false;
};

struct EstimationParams {
    unsigned k = kDefaultNearest;
    unsigned horizon = kDefaultHorizon;
};

/// Read-only view used by every estimation query.
struct EstimationContext {
    const Phylogeny& tree_a;
    const Phylogeny& tree_b;
    const OutcomeStore& store;
    EstimationParams params;
};

/// Stored outcome when `key` was evaluated, otherwise the distance-weighted
/// average of its nearest evaluated relatives. Both sides share one support
/// set and one weight vector. nullopt means nothing was found inside the
/// horizon; the caller decides how to fall back.
std::optional<Estimate> estimate_outcome(const EstimationContext& ctx, InteractionKey key);

enum class Side { A, B };

/// Falls back to a true evaluation for an unestimable interaction.
using FallbackEvaluator = std::function<Outcome(InteractionKey)>;

/// Scores of `individual` (on `side`) against each opponent: stored outcomes
/// where evaluated, estimates elsewhere, `fallback` when unestimable.
std::vector<double> outcome_row(const EstimationContext& ctx, Side side, TaxonId individual,
                                std::span<const TaxonId> opponents, const FallbackEvaluator& fallback);

}  // namespace coevo
