// Command-line front end: run, sweep, verify-network.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coevo/config.hpp"
#include "coevo/run.hpp"
#include "coevo/sorting_network.hpp"

namespace {

int verify_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }
    std::stringstream text;
    text << in.rdbuf();
    const coevo::SortingNetwork net = coevo::parse_network(text.str());
    const bool ok = coevo::verify_network(net);
    std::cout << (ok ? "sorts" : "does-not-sort") << " swaps=" << net.size() << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Co-evolution with phylogeny-informed interaction estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", coevo::software_version());

    // run
    auto* run = app.add_subcommand("run", "Run trials of one configuration");
    std::string config_path;
    std::map<std::string, std::string> flag_values;
    run->add_option("--config", config_path, "Flat key = value config file");
    auto flag = [&](const char* name, const char* key, const char* help) {
        run->add_option_function<std::string>(name, [&flag_values, key](const std::string& v) { flag_values[key] = v; },
                                              help);
    };
    flag("--domain", "domain", "numbers-coo | numbers-coa | sorting-networks");
    flag("--matchmaker", "matchmaker", "all-vs-all | parents-vs-all | random-cohorts | mixed | child-substitution");
    flag("--cohort-size", "cohort_size", "Cohort size for random-cohorts");
    flag("--p-all", "p_all", "All-vs-all probability for mixed");
    flag("--substitution-children", "substitution_children", "Substitute children per parent for child-substitution");
    flag("--parents", "n_parents", "Parents kept by truncation");
    flag("--children", "n_children", "Children per generation");
    flag("--k-nearest", "k_nearest", "Nearest evaluated interactions per estimate");
    flag("--horizon", "horizon", "Phylogenetic search horizon in edges");
    flag("--probes", "probe_count", "Probe interactions per generation");
    flag("--probe-source", "probe_source", "unplanned-children | evaluated-children");
    flag("--seed", "seed", "Root seed");
    flag("--eval-budget", "eval_budget", "Evaluations per trial");
    flag("--trials", "trials", "Number of trials");
    flag("--threads", "threads", "Worker threads");
    flag("--out", "out", "Output directory");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run every *.cfg in a directory");
    std::string sweep_dir;
    std::string sweep_out = "sweep-out";
    sweep->add_option("--configs", sweep_dir, "Directory of config files")->required();
    sweep->add_option("--out", sweep_out, "Root directory for per-config outputs");

    // verify-network
    auto* verify = app.add_subcommand("verify-network", "Check a 16-input network with the zero-one principle");
    std::string network_path;
    verify->add_option("--file", network_path, "File of whitespace-separated lo:hi swaps")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const coevo::ConfigValues file =
                config_path.empty() ? coevo::ConfigValues{} : coevo::read_config_file(config_path);
            const coevo::ExperimentConfig config = coevo::load_config(file, flag_values);
            return coevo::run_trials(config, [](unsigned trial, const coevo::GenerationStats& s) {
                if (s.generation % 50 == 0) {
                    std::cerr << "trial " << trial << " generation " << s.generation << " evaluations "
                              << s.cumulative_evaluations << '\n';
                }
            });
        }
        if (*sweep) return coevo::run_sweep(sweep_dir, sweep_out);
        if (*verify) return verify_network_file(network_path);
    } catch (const coevo::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
