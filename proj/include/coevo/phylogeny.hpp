#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coevo {

/// Identifier of a taxon within one population's phylogeny. Ids are handed
/// out in increasing order and never reused.
struct TaxonId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(TaxonId, TaxonId) = default;
};

struct Taxon {
    TaxonId id;
    std::optional<TaxonId> parent;  // absent for founders
    std::vector<TaxonId> children;  // ascending
    std::uint32_t birth_generation = 0;
    bool extant = true;
};

/// Distance between two interactions given the within-population distances
/// of their corresponding participants.
constexpr unsigned interaction_distance(unsigned distance_a, unsigned distance_b) noexcept {
    return distance_a + distance_b;
}

/// Ancestry tree of a single asexual population.
///
/// Taxa are never re-inserted. Pruned taxa disappear from the graph, but a
/// retained taxon keeps its recorded parent id even if that parent was
/// pruned; graph traversal simply treats the missing parent as a cut edge.
///
/// All const member functions are safe to call concurrently.
class Phylogeny {
public:
    explicit Phylogeny(std::string population_label = {});

    const std::string& label() const noexcept { return label_; }

    /// Inserts a new extant taxon. Throws std::invalid_argument when
    /// `parent` is not present in the tree.
    TaxonId add_taxon(std::optional<TaxonId> parent, std::uint32_t generation);

    void mark_extinct(TaxonId id);

    bool contains(TaxonId id) const noexcept;
    const Taxon& taxon(TaxonId id) const;

    /// Extant taxa in ascending id order.
    std::vector<TaxonId> extant() const;
    std::size_t size() const noexcept { return present_count_; }
    std::size_t extant_count() const noexcept { return extant_count_; }

    /// Shortest undirected path length, or nullopt if it is longer than
    /// `horizon` edges (or no path survives pruning).
    std::optional<unsigned> pairwise_distance(TaxonId x, TaxonId y, unsigned horizon) const;

    /// Calls `visit` for every present neighbour (parent and children).
    template <class Visit>
    void for_each_neighbour(TaxonId id, Visit&& visit) const {
        const Taxon& t = taxon(id);
        if (t.parent && contains(*t.parent)) visit(*t.parent);
        for (TaxonId c : t.children) visit(c);
    }

    /// Removes every taxon farther than `horizon` edges from all extant
    /// taxa. Returns the removed ids in ascending order.
    std::vector<TaxonId> prune(unsigned horizon);

    /// CSV with columns id,parent_id,birth_generation,extant.
    void write_csv(std::ostream& out) const;

    /// One past the largest id ever issued.
    std::uint32_t id_bound() const noexcept { return static_cast<std::uint32_t>(slots_.size()); }

private:
    Taxon& mutable_taxon(TaxonId id);

    std::string label_;
    std::vector<std::optional<Taxon>> slots_;  // indexed by id
    std::size_t present_count_ = 0;
    std::size_t extant_count_ = 0;
};

/// Breadth-first shells around one taxon: layer(d) holds every taxon at
/// distance exactly d, in ascending id order. Shells are expanded lazily, up
/// to the horizon given at construction.
class DistanceShells {
public:
    DistanceShells(const Phylogeny& tree, TaxonId origin, unsigned horizon);

    /// Shell `d`; empty when d exceeds the horizon or the tree has no taxa
    /// that far away.
    const std::vector<TaxonId>& layer(unsigned d);

    /// True iff `id` sits at distance exactly `d` (expands shells as needed).
    bool in_layer(TaxonId id, unsigned d);

private:
    void expand_once();
    unsigned expanded_depth() const noexcept { return static_cast<unsigned>(layers_.size()) - 1; }

    const Phylogeny* tree_;
    unsigned horizon_;
    bool exhausted_ = false;
    std::vector<std::vector<TaxonId>> layers_;
    // Predecessor of each taxon in the newest layer, index-aligned with it.
    // In a forest, refusing to step back to the predecessor is enough to
    // visit every taxon once.
    std::vector<TaxonId> newest_from_;
};

}  // namespace coevo

template <>
struct std::hash<coevo::TaxonId> {
    std::size_t operator()(coevo::TaxonId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
