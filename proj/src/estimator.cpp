#include "coevo/estimator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coevo {

namespace {

// Below this many candidate pairs a split is probed pair by pair; above it
// we compare against walking the store's per-taxon opponent lists.
constexpr std::size_t kDirectProbeLimit = 64;

void collect_split(const std::vector<TaxonId>& layer_a, const std::vector<TaxonId>& layer_b,
                   const OutcomeStore& store, unsigned distance, std::vector<NearInteraction>& hits) {
    const std::size_t pair_cost = layer_a.size() * layer_b.size();
    bool walk_index = false;
    if (pair_cost > kDirectProbeLimit) {
        std::size_t index_cost = 0;
        for (TaxonId x : layer_a) index_cost += store.opponents_of_a(x).size();
        walk_index = index_cost < pair_cost;
    }
    if (walk_index) {
        for (TaxonId x : layer_a) {
            for (TaxonId y : store.opponents_of_a(x)) {
                if (std::binary_search(layer_b.begin(), layer_b.end(), y)) {
                    hits.push_back({{x, y}, distance});
                }
            }
        }
        return;
    }
    for (TaxonId x : layer_a) {
        for (TaxonId y : layer_b) {
            if (store.contains({x, y})) hits.push_back({{x, y}, distance});
        }
    }
}

}  // namespace

std::vector<NearInteraction> k_nearest_evaluated(const Phylogeny& tree_a, const Phylogeny& tree_b,
                                                 const OutcomeStore& store, InteractionKey query, unsigned k,
                                                 unsigned horizon) {
    if (k == 0) throw std::invalid_argument("k_nearest_evaluated: k must be at least 1");
    DistanceShells shells_a(tree_a, query.a, horizon);
    DistanceShells shells_b(tree_b, query.b, horizon);

    std::vector<NearInteraction> result;
    if (store.empty()) return result;

    std::vector<NearInteraction> hits;
    for (unsigned level = 0; level <= 2 * horizon && result.size() < k; ++level) {
        hits.clear();
        const unsigned lo = level > horizon ? level - horizon : 0;
        const unsigned hi = std::min(level, horizon);
        bool any_layer = false;
        for (unsigned da = lo; da <= hi; ++da) {
            const auto& layer_a = shells_a.layer(da);
            if (layer_a.empty()) continue;
            const auto& layer_b = shells_b.layer(level - da);
            if (layer_b.empty()) continue;
            any_layer = true;
            collect_split(layer_a, layer_b, store, level, hits);
        }
        // Shells are contiguous, so an empty level means every later one is
        // empty too.
        if (!any_layer) break;
        std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) { return l.key < r.key; });
        const std::size_t take = std::min<std::size_t>(hits.size(), k - result.size());
        result.insert(result.end(), hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return result;
}

std::vector<double> interaction_weights(std::span<const unsigned> distances) {
    if (distances.empty()) throw std::invalid_argument("interaction_weights: empty support");
    const double total = std::accumulate(distances.begin(), distances.end(), 0.0);
    if (total == 0.0) throw std::invalid_argument("interaction_weights: all distances are zero");
    if (distances.size() == 1) return {1.0};

    const double normalizer = static_cast<double>(distances.size() - 1);
    std::vector<double> w;
    w.reserve(distances.size());
    for (unsigned d : distances) w.push_back((total - d) / total / normalizer);
    return w;
}

std::optional<Estimate> estimate_outcome(const EstimationContext& ctx, InteractionKey key) {
    if (const Outcome* stored = ctx.store.find(key)) {
        return Estimate{stored->score_a, stored->score_b, {{key, 0}}, true};
    }
    auto support = k_nearest_evaluated(ctx.tree_a, ctx.tree_b, ctx.store, key, ctx.params.k, ctx.params.horizon);
    if (support.empty()) return std::nullopt;

    std::vector<unsigned> distances;
    distances.reserve(support.size());
    for (const auto& s : support) distances.push_back(s.distance);
    const auto w = interaction_weights(distances);

    double a = 0.0;
    double b = 0.0;
    for (std::size_t j = 0; j < support.size(); ++j) {
        const Outcome& o = *ctx.store.find(support[j].key);
        a += w[j] * o.score_a;
        b += w[j] * o.score_b;
    }
    const OutcomeRange r = ctx.store.range();
    a = std::clamp(a, r.min, r.max);
    b = std::clamp(b, r.min, r.max);
    return Estimate{a, b, std::move(support), false};
}

std::vector<double> outcome_row(const EstimationContext& ctx, Side side, TaxonId individual,
                                std::span<const TaxonId> opponents, const FallbackEvaluator& fallback) {
    std::vector<double> row;
    row.reserve(opponents.size());
    for (TaxonId opponent : opponents) {
        const InteractionKey key = side == Side::A ? InteractionKey{individual, opponent}
                                                   : InteractionKey{opponent, individual};
        double a = 0.0;
        double b = 0.0;
        if (auto est = estimate_outcome(ctx, key)) {
            a = est->value_a;
            b = est->value_b;
        } else {
            if (!fallback) throw std::runtime_error("outcome_row: unestimable interaction and no fallback");
            const Outcome o = fallback(key);
            a = o.score_a;
            b = o.score_b;
        }
        row.push_back(side == Side::A ? a : b);
    }
    return row;
}

}  // namespace coevo
