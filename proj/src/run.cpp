#include "coevo/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#ifndef COEVO_VERSION
#define COEVO_VERSION "0.0.0"
#endif

namespace coevo {

namespace {

namespace fs = std::filesystem;

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

template <class Domain>
std::vector<GenerationStats> run_domain(Domain domain, const ExperimentConfig& config, unsigned trial_index,
                                        std::ostream& csv, const GenerationObserver& observer,
                                        const fs::path* phylogeny_dir) {
    Trial<Domain> trial(std::move(domain), config, trial_seed(config.seed, trial_index));
    std::vector<GenerationStats> all;
    write_csv_header(csv, config.domain);
    while (!trial.finished()) {
        GenerationStats stats = trial.step();
        write_csv_row(csv, trial_index, stats);
        if (observer) observer(trial_index, stats);
        all.push_back(std::move(stats));
    }
    if (phylogeny_dir) {
        char name[64];
        std::snprintf(name, sizeof name, "phylogeny_a_trial_%03u.csv", trial_index);
        std::ofstream a(*phylogeny_dir / name);
        trial.tree_a().write_csv(a);
        std::snprintf(name, sizeof name, "phylogeny_b_trial_%03u.csv", trial_index);
        std::ofstream b(*phylogeny_dir / name);
        trial.tree_b().write_csv(b);
    }
    return all;
}

std::vector<GenerationStats> dispatch(const ExperimentConfig& config, unsigned trial_index, std::ostream& csv,
                                      const GenerationObserver& observer, const fs::path* phylogeny_dir) {
    switch (config.domain) {
        case DomainKind::NumbersCompareOnOne:
            return run_domain(NumbersDomain(NumbersVariant::CompareOnOne), config, trial_index, csv, observer,
                              phylogeny_dir);
        case DomainKind::NumbersCompareOnAll:
            return run_domain(NumbersDomain(NumbersVariant::CompareOnAll), config, trial_index, csv, observer,
                              phylogeny_dir);
        case DomainKind::SortingNetworks:
            return run_domain(
                SortingDomain(config.network_min_size, config.network_max_size, config.bonus_in_lexicase), config,
                trial_index, csv, observer, phylogeny_dir);
    }
    throw std::logic_error("unhandled domain");
}

std::string trial_file_name(unsigned trial) {
    char name[32];
    std::snprintf(name, sizeof name, "trial_%03u.csv", trial);
    return name;
}

}  // namespace

std::string software_version() { return COEVO_VERSION; }

std::vector<std::string> csv_columns(DomainKind domain) {
    std::vector<std::string> cols = {"trial", "generation", "cumulative_evaluations", "probe_evaluations",
                                     "probe_mean_error"};
    const auto metrics =
        domain == DomainKind::SortingNetworks ? SortingDomain::metric_names() : NumbersDomain::metric_names();
    cols.insert(cols.end(), metrics.begin(), metrics.end());
    return cols;
}

void write_csv_header(std::ostream& out, DomainKind domain) {
    const auto cols = csv_columns(domain);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
}

void write_csv_row(std::ostream& out, unsigned trial, const GenerationStats& s) {
    out << trial << ',' << s.generation << ',' << s.cumulative_evaluations << ',' << s.probe_evaluations << ','
        << format_real(s.probe_mean_error);
    for (const auto& [name, value] : s.domain_metrics) out << ',' << format_real(value);
    out << '\n';
}

std::vector<GenerationStats> run_trial(const ExperimentConfig& config, unsigned trial_index, std::ostream& csv,
                                       const GenerationObserver& observer) {
    return dispatch(config, trial_index, csv, observer, nullptr);
}

int run_trials(const ExperimentConfig& config, const GenerationObserver& observer) {
    if (auto problems = validate(config); !problems.empty()) throw ConfigError(std::move(problems));
    const fs::path out_dir(config.output_path);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path manifest_path = out_dir / "manifest.json";
    {
        std::ofstream probe(manifest_path);
        if (ec || !probe) throw ConfigError({"output path '" + config.output_path + "' is not writable"});
    }

    nlohmann::json manifest;
    manifest["software_version"] = software_version();
    manifest["treatment"] = std::string(to_string(config.matchmaker.kind));
    manifest["domain"] = std::string(to_string(config.domain));
    manifest["root_seed"] = config.seed;
    manifest["config"] = to_values(config);
    manifest["columns"] = csv_columns(config.domain);
    manifest["trials"] = nlohmann::json::array();

    for (unsigned t = 0; t < config.trial_count; ++t) {
        const std::string file = trial_file_name(t);
        std::ofstream csv(out_dir / file);
        if (!csv) throw std::runtime_error("cannot write " + (out_dir / file).string());
        const auto stats = dispatch(config, t, csv, observer, config.export_phylogeny ? &out_dir : nullptr);
        manifest["trials"].push_back({{"index", t},
                                      {"seed", trial_seed(config.seed, t)},
                                      {"file", file},
                                      {"generations", stats.size()},
                                      {"cumulative_evaluations", stats.empty() ? 0 : stats.back().cumulative_evaluations}});
    }
    std::ofstream(manifest_path) << manifest.dump(2) << '\n';
    return 0;
}

int run_sweep(const fs::path& config_dir, const fs::path& output_root, const ConfigValues& overrides) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cfg") files.push_back(entry.path());
    }
    if (files.empty()) throw ConfigError({"no *.cfg files in '" + config_dir.string() + "'"});
    std::sort(files.begin(), files.end());
    int status = 0;
    for (const auto& file : files) {
        ConfigValues flags = overrides;
        flags["out"] = (output_root / file.stem()).string();
        const ExperimentConfig config = load_config(read_config_file(file), flags);
        std::cerr << "sweep: " << file.filename().string() << " -> " << config.output_path << '\n';
        status |= run_trials(config);
    }
    return status;
}

}  // namespace coevo
