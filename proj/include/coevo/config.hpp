#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coevo/matchmaker.hpp"

namespace coevo {

enum class DomainKind { NumbersCompareOnOne, NumbersCompareOnAll, SortingNetworks };

std::string_view to_string(DomainKind d);
/// Accepts numbers-coo / compare-on-one, numbers-coa / compare-on-all,
/// sorting-networks. Throws std::invalid_argument otherwise.
DomainKind parse_domain(std::string_view name);

/// Where probe interactions come from.
enum class ProbeSource {
    UnplannedChildren,  // child-vs-child pairs outside the match plan
    EvaluatedChildren,  // child-vs-child pairs inside the plan (diagnostic)
};

struct ExperimentConfig {
    DomainKind domain = DomainKind::NumbersCompareOnOne;
    MatchmakerConfig matchmaker{};
    std::size_t n_parents = 25;
    std::size_t n_children = 75;
    unsigned k_nearest = 2;
    unsigned horizon = 10;
    std::size_t probe_count = 200;
    ProbeSource probe_source = ProbeSource::UnplannedChildren;
    std::uint64_t eval_budget = 0;
    std::uint64_t seed = 1;
    unsigned trial_count = 1;
    std::string output_path = "out";
    unsigned threads = 1;
    bool bonus_in_lexicase = true;
    std::size_t network_min_size = 60;
    std::size_t network_max_size = 80;
    bool export_phylogeny = false;

    std::size_t population_size() const noexcept { return n_parents + n_children; }
};

/// Per-domain defaults (parents / children / cohort size).
ExperimentConfig domain_defaults(DomainKind d);

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

using ConfigValues = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment.
ConfigValues parse_config_text(std::string_view text);
ConfigValues read_config_file(const std::filesystem::path& path);

/// Builds a config from file values overlaid with flag values. `domain` and
/// `eval_budget` are required. Throws ConfigError listing every problem.
ExperimentConfig load_config(const ConfigValues& file_values, const ConfigValues& overrides = {});

/// Invariant violations, one message each; empty when valid.
std::vector<std::string> validate(const ExperimentConfig& config);

/// Flat key = value rendering, readable back by parse_config_text.
ConfigValues to_values(const ExperimentConfig& config);

}  // namespace coevo
