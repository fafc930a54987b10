#include "coevo/phylogeny.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace coevo {

Phylogeny::Phylogeny(std::string population_label) : label_(std::move(population_label)) {}

TaxonId Phylogeny::add_taxon(std::optional<TaxonId> parent, std::uint32_t generation) {
    if (parent && !contains(*parent)) {
        throw std::invalid_argument("phylogeny '" + label_ + "': unknown parent taxon " +
                                    std::to_string(parent->value));
    }
    const TaxonId id{static_cast<std::uint32_t>(slots_.size())};
    slots_.push_back(Taxon{id, parent, {}, generation, true});
    if (parent) mutable_taxon(*parent).children.push_back(id);
    ++present_count_;
    ++extant_count_;
    return id;
}

void Phylogeny::mark_extinct(TaxonId id) {
    Taxon& t = mutable_taxon(id);
    if (t.extant) {
        t.extant = false;
        --extant_count_;
    }
}

bool Phylogeny::contains(TaxonId id) const noexcept {
    return id.value < slots_.size() && slots_[id.value].has_value();
}

const Taxon& Phylogeny::taxon(TaxonId id) const {
    if (!contains(id)) {
        throw std::out_of_range("phylogeny '" + label_ + "': unknown taxon " + std::to_string(id.value));
    }
    return *slots_[id.value];
}

Taxon& Phylogeny::mutable_taxon(TaxonId id) {
    if (!contains(id)) {
        throw std::out_of_range("phylogeny '" + label_ + "': unknown taxon " + std::to_string(id.value));
    }
    return *slots_[id.value];
}

std::vector<TaxonId> Phylogeny::extant() const {
    std::vector<TaxonId> out;
    out.reserve(extant_count_);
    for (const auto& slot : slots_) {
        if (slot && slot->extant) out.push_back(slot->id);
    }
    return out;
}

std::optional<unsigned> Phylogeny::pairwise_distance(TaxonId x, TaxonId y, unsigned horizon) const {
    (void)taxon(x);
    (void)taxon(y);
    DistanceShells shells(*this, x, horizon);
    for (unsigned d = 0; d <= horizon; ++d) {
        const auto& layer = shells.layer(d);
        if (layer.empty()) break;
        if (std::binary_search(layer.begin(), layer.end(), y)) return d;
    }
    return std::nullopt;
}

std::vector<TaxonId> Phylogeny::prune(unsigned horizon) {
    // Multi-source BFS from every extant taxon, depth-limited.
    constexpr unsigned kUnreached = ~0u;
    std::vector<unsigned> depth(slots_.size(), kUnreached);
    std::vector<TaxonId> frontier;
    for (const auto& slot : slots_) {
        if (slot && slot->extant) {
            depth[slot->id.value] = 0;
            frontier.push_back(slot->id);
        }
    }
    for (unsigned d = 1; d <= horizon && !frontier.empty(); ++d) {
        std::vector<TaxonId> next;
        for (TaxonId id : frontier) {
            for_each_neighbour(id, [&](TaxonId n) {
                if (depth[n.value] == kUnreached) {
                    depth[n.value] = d;
                    next.push_back(n);
                }
            });
        }
        frontier = std::move(next);
    }

    std::vector<TaxonId> removed;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i] && depth[i] == kUnreached) removed.push_back(slots_[i]->id);
    }
    for (TaxonId id : removed) {
        const Taxon& t = *slots_[id.value];
        if (t.parent && contains(*t.parent) && depth[t.parent->value] != kUnreached) {
            auto& siblings = slots_[t.parent->value]->children;
            siblings.erase(std::remove(siblings.begin(), siblings.end(), id), siblings.end());
        }
    }
    for (TaxonId id : removed) {
        // Children keep their recorded parent id; the edge is simply gone.
        slots_[id.value].reset();
        --present_count_;
    }
    return removed;
}

void Phylogeny::write_csv(std::ostream& out) const {
    out << "id,parent_id,birth_generation,extant\n";
    for (const auto& slot : slots_) {
        if (!slot) continue;
        out << slot->id.value << ',';
        if (slot->parent) out << slot->parent->value;
        out << ',' << slot->birth_generation << ',' << (slot->extant ? 1 : 0) << '\n';
    }
}

DistanceShells::DistanceShells(const Phylogeny& tree, TaxonId origin, unsigned horizon)
    : tree_(&tree), horizon_(horizon) {
    (void)tree.taxon(origin);
    layers_.push_back({origin});
    newest_from_.push_back(origin);
}

void DistanceShells::expand_once() {
    if (exhausted_) return;
    if (expanded_depth() >= horizon_ || layers_.back().empty()) {
        exhausted_ = true;
        return;
    }
    std::vector<std::pair<TaxonId, TaxonId>> next;  // (taxon, reached from)
    const auto& current = layers_.back();
    for (std::size_t i = 0; i < current.size(); ++i) {
        const TaxonId from = newest_from_[i];
        const TaxonId here = current[i];
        tree_->for_each_neighbour(here, [&](TaxonId n) {
            if (n != from) next.emplace_back(n, here);
        });
    }
    std::sort(next.begin(), next.end());
    std::vector<TaxonId> layer;
    layer.reserve(next.size());
    newest_from_.clear();
    for (const auto& [id, from] : next) {
        layer.push_back(id);
        newest_from_.push_back(from);
    }
    if (layer.empty()) exhausted_ = true;
    layers_.push_back(std::move(layer));
}

const std::vector<TaxonId>& DistanceShells::layer(unsigned d) {
    static const std::vector<TaxonId> kEmpty;
    if (d > horizon_) return kEmpty;
    while (layers_.size() <= d && !exhausted_) expand_once();
    return d < layers_.size() ? layers_[d] : kEmpty;
}

bool DistanceShells::in_layer(TaxonId id, unsigned d) {
    const auto& l = layer(d);
    return std::binary_search(l.begin(), l.end(), id);
}

}  // namespace coevo
