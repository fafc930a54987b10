#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coevo/phylogeny.hpp"

namespace coevo {

/// An interaction between taxon `a` of the first population and taxon `b`
/// of the second. The population pair itself lives on the OutcomeStore.
struct InteractionKey {
    TaxonId a;
    TaxonId b;

    friend constexpr auto operator<=>(const InteractionKey&, const InteractionKey&) = default;
};

struct Outcome {
    double score_a = 0.0;
    double score_b = 0.0;
    bool evaluated = true;
};

struct OutcomeRange {
    double min = 0.0;
    double max = 1.0;

    bool contains(double v) const noexcept { return v >= min && v <= max; }
};

struct PopulationPair {
    std::string first = "A";
    std::string second = "B";
};

/// Sparse record of evaluated interaction outcomes between two populations.
/// Estimates are never written here.
class OutcomeStore {
public:
    explicit OutcomeStore(OutcomeRange range, PopulationPair populations = {});

    const PopulationPair& populations() const noexcept { return populations_; }
    OutcomeRange range() const noexcept { return range_; }

    /// Inserts or overwrites. Throws std::domain_error if either score lies
    /// outside the declared range.
    void record(InteractionKey key, double score_a, double score_b);

    /// nullptr when `key` was never evaluated (or was dropped by pruning).
    const Outcome* find(InteractionKey key) const;
    bool contains(InteractionKey key) const { return find(key) != nullptr; }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Taxa of the second population that `a` has an evaluated outcome with,
    /// and vice versa. Order is unspecified.
    std::span<const TaxonId> opponents_of_a(TaxonId a) const;
    std::span<const TaxonId> opponents_of_b(TaxonId b) const;

    /// Drops outcomes involving taxa no longer present in their tree.
    /// Returns the number of entries removed.
    std::size_t drop_missing(const Phylogeny& tree_a, const Phylogeny& tree_b);

    /// All entries, sorted by key.
    std::vector<std::pair<InteractionKey, Outcome>> entries() const;

    /// Order-independent digest of the contents.
    std::uint64_t fingerprint() const;

private:
    static std::uint64_t pack(InteractionKey key) noexcept {
        return (std::uint64_t{key.a.value} << 32) | key.b.value;
    }
    static InteractionKey unpack(std::uint64_t packed) noexcept {
        return {TaxonId{static_cast<std::uint32_t>(packed >> 32)}, TaxonId{static_cast<std::uint32_t>(packed)}};
    }
    void rebuild_index();

    OutcomeRange range_;
    PopulationPair populations_;
    std::unordered_map<std::uint64_t, Outcome> entries_;
    std::unordered_map<std::uint32_t, std::vector<TaxonId>> by_a_;
    std::unordered_map<std::uint32_t, std::vector<TaxonId>> by_b_;
};

}  // namespace coevo
