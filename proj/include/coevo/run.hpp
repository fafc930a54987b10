#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "coevo/config.hpp"
#include "coevo/engine.hpp"

namespace coevo {

/// Version string recorded in manifests.
std::string software_version();

/// trial, generation, cumulative_evaluations, probe_evaluations,
/// probe_mean_error, then the domain's metric columns.
std::vector<std::string> csv_columns(DomainKind domain);

void write_csv_header(std::ostream& out, DomainKind domain);
void write_csv_row(std::ostream& out, unsigned trial, const GenerationStats& stats);

/// Called after every generation of every trial.
using GenerationObserver = std::function<void(unsigned trial, const GenerationStats&)>;

/// Runs one trial until its evaluation budget is spent, streaming rows to
/// `csv` (header included). Returns every generation's stats.
std::vector<GenerationStats> run_trial(const ExperimentConfig& config, unsigned trial_index, std::ostream& csv,
                                       const GenerationObserver& observer = {});

/// Runs config.trial_count trials into config.output_path: one
/// trial_NNN.csv per trial plus manifest.json. Throws ConfigError for an
/// invalid config or an unwritable output directory. Returns 0 on success.
int run_trials(const ExperimentConfig& config, const GenerationObserver& observer = {});

/// Runs every *.cfg file in `config_dir` (sorted by name), sending each
/// one's output to `output_root/<file stem>`.
int run_sweep(const std::filesystem::path& config_dir, const std::filesystem::path& output_root,
              const ConfigValues& overrides = {});

}  // namespace coevo
