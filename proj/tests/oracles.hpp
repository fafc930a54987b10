#pragma once

// Independent reference implementations used to check the library.
// Written for clarity over speed; none of them share code with src/.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "coevo/estimator.hpp"
#include "coevo/phylogeny.hpp"
#include "coevo/selection.hpp"
#include "coevo/sorting_network.hpp"

namespace testing {

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Grows `n` taxa into `tree`. Roughly one in ten is a new founder, the
/// rest attach to a uniformly chosen earlier taxon. Returns each taxon's
/// parent index (or nullopt) in id order.
inline std::vector<std::optional<std::uint32_t>> grow_random_tree(coevo::Phylogeny& tree, std::size_t n,
                                                                  std::mt19937_64& rng) {
    std::vector<std::optional<std::uint32_t>> parents;
    std::bernoulli_distribution founder(0.1);
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::uint32_t> parent;
        if (i > 0 && !founder(rng)) {
            parent = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(i - 1))(rng);
        }
        const coevo::TaxonId id =
            tree.add_taxon(parent ? std::optional<coevo::TaxonId>(coevo::TaxonId{*parent}) : std::nullopt,
                           static_cast<std::uint32_t>(i));
        (void)id;
        parents.push_back(parent);
    }
    return parents;
}

/// Edge-count distances between every pair, by BFS from each node over the
/// undirected parent graph. kUnreachable marks different components.
inline std::vector<std::vector<unsigned>> all_pairs_distances(const std::vector<std::optional<std::uint32_t>>& parents) {
    const std::size_t n = parents.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (parents[i]) {
            adj[i].push_back(*parents[i]);
            adj[*parents[i]].push_back(i);
        }
    }
    std::vector<std::vector<unsigned>> dist(n, std::vector<unsigned>(n, kUnreachable));
    for (std::uint32_t s = 0; s < n; ++s) {
        std::queue<std::uint32_t> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                if (dist[s][v] == kUnreachable) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
            }
        }
    }
    return dist;
}

struct OracleEstimate {
    double value_a = 0.0;
    double value_b = 0.0;
    std::vector<coevo::NearInteraction> support;
};

/// Enumerates every stored interaction, keeps those whose participants are
/// each within `horizon` of the query's, sorts by (distance, a, b), takes
/// the first k and averages with the complement-of-distance weights.
inline std::optional<OracleEstimate> brute_force_estimate(const std::vector<std::vector<unsigned>>& dist_a,
                                                          const std::vector<std::vector<unsigned>>& dist_b,
                                                          const coevo::OutcomeStore& store,
                                                          coevo::InteractionKey query, unsigned k,
                                                          unsigned horizon) {
    if (const auto* exact = store.find(query)) {
        return OracleEstimate{exact->score_a, exact->score_b, {{query, 0}}};
    }
    std::vector<std::pair<coevo::NearInteraction, coevo::Outcome>> found;
    for (const auto& [key, outcome] : store.entries()) {
        const unsigned da = dist_a[query.a.value][key.a.value];
        const unsigned db = dist_b[query.b.value][key.b.value];
        if (da > horizon || db > horizon) continue;
        found.push_back({{key, da + db}, outcome});
    }
    if (found.empty()) return std::nullopt;
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first.distance != y.first.distance) return x.first.distance < y.first.distance;
        return x.first.key < y.first.key;
    });
    if (found.size() > k) found.resize(k);

    OracleEstimate est;
    const std::size_t n = found.size();
    double total = 0.0;
    for (const auto& f : found) total += f.first.distance;
    for (const auto& f : found) {
        const double w = n == 1 ? 1.0 : (total - f.first.distance) / total / static_cast<double>(n - 1);
        est.value_a += w * f.second.score_a;
        est.value_b += w * f.second.score_b;
        est.support.push_back(f.first);
    }
    return est;
}

/// Exact lexicase selection probabilities by enumerating every test order.
/// Candidates tied on every test split the order's mass evenly.
inline std::vector<double> lexicase_probabilities(const std::vector<std::vector<double>>& scores) {
    const std::size_t n = scores.size();
    const std::size_t tests = scores.front().size();
    std::vector<std::size_t> order(tests);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> prob(n, 0.0);
    std::size_t orders = 0;
    do {
        ++orders;
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t t : order) {
            double best = -std::numeric_limits<double>::infinity();
            for (auto c : pool) best = std::max(best, scores[c][t]);
            std::erase_if(pool, [&](std::size_t c) { return scores[c][t] != best; });
        }
        for (auto c : pool) prob[c] += 1.0 / static_cast<double>(pool.size());
    } while (std::next_permutation(order.begin(), order.end()));
    for (auto& p : prob) p /= static_cast<double>(orders);
    return prob;
}

/// Batcher's odd-even merge sort network on 16 channels (0-based pairs).
inline std::vector<std::pair<int, int>> batcher_pairs(int n = 16) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p < n; p <<= 1) {
        for (int k = p; k >= 1; k >>= 1) {
            for (int j = k % p; j + k < n; j += 2 * k) {
                for (int i = 0; i < k && i + j + k < n; ++i) {
                    if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) out.push_back({i + j, i + j + k});
                }
            }
        }
    }
    return out;
}

inline coevo::SortingNetwork batcher16() {
    coevo::SortingNetwork net;
    for (auto [lo, hi] : batcher_pairs()) net.swaps.push_back(coevo::Swap::from_channels(lo + 1, hi + 1));
    return net;
}

/// Straight-line zero-one check, one input at a time.
inline bool sorts_all_binary(const coevo::SortingNetwork& net) {
    for (std::uint32_t v = 0; v < (1u << 16); ++v) {
        int bits[16];
        for (int i = 0; i < 16; ++i) bits[i] = (v >> i) & 1;
        for (const auto& s : net.swaps) {
            if (bits[s.lo] > bits[s.hi]) std::swap(bits[s.lo], bits[s.hi]);
        }
        for (int i = 0; i + 1 < 16; ++i) {
            if (bits[i] > bits[i + 1]) return false;
        }
    }
    return true;
}

}  // namespace testing
