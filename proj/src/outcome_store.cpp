#include "coevo/outcome_store.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace coevo {

namespace {

std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

OutcomeStore::OutcomeStore(OutcomeRange range, PopulationPair populations)
    : range_(range), populations_(std::move(populations)) {}

void OutcomeStore::record(InteractionKey key, double score_a, double score_b) {
    if (!range_.contains(score_a) || !range_.contains(score_b)) {
        throw std::domain_error("outcome (" + std::to_string(score_a) + ", " + std::to_string(score_b) +
                                ") outside range [" + std::to_string(range_.min) + ", " +
                                std::to_string(range_.max) + "]");
    }
    auto [it, inserted] = entries_.insert_or_assign(pack(key), Outcome{score_a, score_b, true});
    (void)it;
    if (inserted) {
        by_a_[key.a.value].push_back(key.b);
        by_b_[key.b.value].push_back(key.a);
    }
}

const Outcome* OutcomeStore::find(InteractionKey key) const {
    auto it = entries_.find(pack(key));
    return it == entries_.end() ? nullptr : &it->second;
}

std::span<const TaxonId> OutcomeStore::opponents_of_a(TaxonId a) const {
    auto it = by_a_.find(a.value);
    if (it == by_a_.end()) return {};
    return it->second;
}

std::span<const TaxonId> OutcomeStore::opponents_of_b(TaxonId b) const {
    auto it = by_b_.find(b.value);
    if (it == by_b_.end()) return {};
    return it->second;
}

std::size_t OutcomeStore::drop_missing(const Phylogeny& tree_a, const Phylogeny& tree_b) {
    const std::size_t removed = std::erase_if(entries_, [&](const auto& entry) {
        const InteractionKey key = unpack(entry.first);
        return !tree_a.contains(key.a) || !tree_b.contains(key.b);
    });
    if (removed > 0) rebuild_index();
    return removed;
}

void OutcomeStore::rebuild_index() {
    by_a_.clear();
    by_b_.clear();
    for (const auto& [packed, outcome] : entries_) {
        const InteractionKey key = unpack(packed);
        by_a_[key.a.value].push_back(key.b);
        by_b_[key.b.value].push_back(key.a);
    }
}

std::vector<std::pair<InteractionKey, Outcome>> OutcomeStore::entries() const {
    std::vector<std::pair<InteractionKey, Outcome>> out;
    out.reserve(entries_.size());
    for (const auto& [packed, outcome] : entries_) out.emplace_back(unpack(packed), outcome);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::uint64_t OutcomeStore::fingerprint() const {
    std::uint64_t digest = mix(entries_.size());
    for (const auto& [packed, outcome] : entries_) {
        digest += mix(packed ^ mix(std::bit_cast<std::uint64_t>(outcome.score_a)) ^
                      mix(std::bit_cast<std::uint64_t>(outcome.score_b) + 1));
    }
    return digest;
}

}  // namespace coevo
