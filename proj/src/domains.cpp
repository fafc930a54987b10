#include "coevo/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coevo {

Outcome NumbersDomain::play(const GenomeA& a, const GenomeB& b) const {
    return Outcome{static_cast<double>(play_numbers(variant_, a, b)), static_cast<double>(play_numbers(variant_, b, a)),
                   true};
}

std::vector<std::string> NumbersDomain::metric_names() { return {"mean_genotype_sum_a", "mean_genotype_sum_b"}; }

std::vector<double> NumbersDomain::metrics(std::span<const Individual<GenomeA>> pop_a,
                                           std::span<const Individual<GenomeB>> pop_b) const {
    auto genomes = [](auto pop) {
        std::vector<NumbersGenome> out;
        out.reserve(pop.size());
        for (const auto& ind : pop) out.push_back(ind.genome);
        return out;
    };
    return {mean_genotype_sum(genomes(pop_a)), mean_genotype_sum(genomes(pop_b))};
}

Outcome SortingDomain::play(const GenomeA& net, const GenomeB& parasite) const {
    const SortingScore s = score_interaction(net, parasite);
    return Outcome{static_cast<double>(s.network), static_cast<double>(s.parasite), true};
}

double SortingDomain::bonus_a(const GenomeA& net, std::span<const double> row) const {
    const bool perfect = !row.empty() && std::all_of(row.begin(), row.end(), [](double v) { return v == kMaxScore; });
    return perfect ? size_bonus(net.size()) : 0.0;
}

std::vector<std::string> SortingDomain::metric_names() { return {"pct_perfect_networks", "best_network_size"}; }

std::vector<double> SortingDomain::metrics(std::span<const Individual<GenomeA>> pop_a,
                                           std::span<const Individual<GenomeB>>) const {
    std::size_t perfect = 0;
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& ind : pop_a) {
        if (!verify_network(ind.genome)) continue;
        ++perfect;
        const auto size = static_cast<double>(ind.genome.size());
        if (std::isnan(best) || size < best) best = size;
    }
    const double pct = pop_a.empty() ? 0.0 : 100.0 * static_cast<double>(perfect) / static_cast<double>(pop_a.size());
    return {pct, best};
}

}  // namespace coevo
