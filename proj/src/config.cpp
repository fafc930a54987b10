#include "coevo/config.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>

namespace coevo {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string join(const std::vector<std::string>& lines) {
    std::string out = "invalid configuration:";
    for (const auto& l : lines) out += "\n  - " + l;
    return out;
}

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "domain",        "matchmaker",      "n_parents",         "n_children",       "cohort_size",
        "p_all",         "substitution_children", "k_nearest",   "horizon",          "probe_count",
        "probe_source",  "eval_budget",     "seed",              "trials",           "out",
        "threads",       "bonus_in_lexicase", "network_min_size", "network_max_size", "export_phylogeny",
    };
    return keys;
}

// Collects conversion problems instead of throwing on the first one.
class Reader {
public:
    explicit Reader(const ConfigValues& values) : values_(values) {}

    template <class Int>
    void integer(const std::string& key, Int& target) {
        auto it = values_.find(key);
        if (it == values_.end()) return;
        const std::string& text = it->second;
        std::uint64_t parsed = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
        if (ec != std::errc{} || ptr != text.data() + text.size() ||
            parsed > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
            problems.push_back(key + ": expected a non-negative integer, got '" + text + "'");
            return;
        }
        target = static_cast<Int>(parsed);
    }

    void real(const std::string& key, double& target) {
        auto it = values_.find(key);
        if (it == values_.end()) return;
        try {
            std::size_t used = 0;
            const double v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing");
            target = v;
        } catch (const std::exception&) {
            problems.push_back(key + ": expected a number, got '" + it->second + "'");
        }
    }

    void boolean(const std::string& key, bool& target) {
        auto it = values_.find(key);
        if (it == values_.end()) return;
        const std::string& v = it->second;
        if (v == "true" || v == "1" || v == "yes") {
            target = true;
        } else if (v == "false" || v == "0" || v == "no") {
            target = false;
        } else {
            problems.push_back(key + ": expected true/false, got '" + v + "'");
        }
    }

    void text(const std::string& key, std::string& target) {
        auto it = values_.find(key);
        if (it != values_.end()) target = it->second;
    }

    std::vector<std::string> problems;

private:
    const ConfigValues& values_;
};

}  // namespace

std::string_view to_string(DomainKind d) {
    switch (d) {
        case DomainKind::NumbersCompareOnOne: return "numbers-coo";
        case DomainKind::NumbersCompareOnAll: return "numbers-coa";
        case DomainKind::SortingNetworks: return "sorting-networks";
    }
    return "unknown";
}

DomainKind parse_domain(std::string_view name) {
    if (name == "numbers-coo" || name == "compare-on-one") return DomainKind::NumbersCompareOnOne;
    if (name == "numbers-coa" || name == "compare-on-all") return DomainKind::NumbersCompareOnAll;
    if (name == "sorting-networks") return DomainKind::SortingNetworks;
    throw std::invalid_argument("unknown domain '" + std::string(name) +
                                "' (expected numbers-coo, numbers-coa, sorting-networks)");
}

ExperimentConfig domain_defaults(DomainKind d) {
    ExperimentConfig c;
    c.domain = d;
    if (d == DomainKind::SortingNetworks) {
        c.n_parents = 100;
        c.n_children = 500;
        c.matchmaker.cohort_size = 200;
    } else {
        c.n_parents = 25;
        c.n_children = 75;
        c.matchmaker.cohort_size = 50;
    }
    return c;
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

ConfigValues parse_config_text(std::string_view text) {
    ConfigValues values;
    std::vector<std::string> problems;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) {
            problems.push_back("line " + std::to_string(line_no) + ": empty key");
            continue;
        }
        values[std::move(key)] = std::move(value);
    }
    if (!problems.empty()) throw ConfigError(std::move(problems));
    return values;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot read config file '" + path.string() + "'"});
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

ExperimentConfig load_config(const ConfigValues& file_values, const ConfigValues& overrides) {
    ConfigValues merged = file_values;
    for (const auto& [k, v] : overrides) merged[k] = v;

    std::vector<std::string> problems;
    for (const auto& [k, v] : merged) {
        if (std::find(known_keys().begin(), known_keys().end(), k) == known_keys().end()) {
            problems.push_back("unknown key '" + k + "'");
        }
    }
    for (const char* required : {"domain", "eval_budget"}) {
        if (!merged.contains(required)) problems.push_back(std::string("missing required field '") + required + "'");
    }

    ExperimentConfig config;
    if (auto it = merged.find("domain"); it != merged.end()) {
        try {
            config = domain_defaults(parse_domain(it->second));
        } catch (const std::invalid_argument& e) {
            problems.push_back(std::string("domain: ") + e.what());
        }
    }
    if (auto it = merged.find("matchmaker"); it != merged.end()) {
        try {
            config.matchmaker.kind = parse_matchmaker(it->second);
        } catch (const std::invalid_argument& e) {
            problems.push_back(std::string("matchmaker: ") + e.what());
        }
    }
    if (auto it = merged.find("probe_source"); it != merged.end()) {
        if (it->second == "unplanned-children") {
            config.probe_source = ProbeSource::UnplannedChildren;
        } else if (it->second == "evaluated-children") {
            config.probe_source = ProbeSource::EvaluatedChildren;
        } else {
            problems.push_back("probe_source: expected unplanned-children or evaluated-children, got '" +
                               it->second + "'");
        }
    }

    Reader r(merged);
    r.integer("n_parents", config.n_parents);
    r.integer("n_children", config.n_children);
    r.integer("cohort_size", config.matchmaker.cohort_size);
    r.real("p_all", config.matchmaker.p_all);
    r.integer("substitution_children", config.matchmaker.substitution_children);
    r.integer("k_nearest", config.k_nearest);
    r.integer("horizon", config.horizon);
    r.integer("probe_count", config.probe_count);
    r.integer("eval_budget", config.eval_budget);
    r.integer("seed", config.seed);
    r.integer("trials", config.trial_count);
    r.text("out", config.output_path);
    r.integer("threads", config.threads);
    r.boolean("bonus_in_lexicase", config.bonus_in_lexicase);
    r.integer("network_min_size", config.network_min_size);
    r.integer("network_max_size", config.network_max_size);
    r.boolean("export_phylogeny", config.export_phylogeny);
    problems.insert(problems.end(), r.problems.begin(), r.problems.end());

    if (problems.empty()) {
        auto semantic = validate(config);
        problems.insert(problems.end(), semantic.begin(), semantic.end());
    }
    if (!problems.empty()) throw ConfigError(std::move(problems));
    return config;
}

std::vector<std::string> validate(const ExperimentConfig& c) {
    std::vector<std::string> problems;
    if (c.n_parents == 0) problems.push_back("n_parents must be at least 1");
    if (c.n_children == 0) problems.push_back("n_children must be at least 1");
    if (c.k_nearest < 1) problems.push_back("k_nearest must be at least 1");
    if (c.eval_budget == 0) problems.push_back("eval_budget must be positive");
    if (c.trial_count == 0) problems.push_back("trials must be at least 1");
    if (c.threads == 0) problems.push_back("threads must be at least 1");
    if (c.output_path.empty()) problems.push_back("out must not be empty");
    if (c.domain == DomainKind::SortingNetworks &&
        (c.network_min_size == 0 || c.network_min_size > c.network_max_size)) {
        problems.push_back("network_min_size must be positive and not exceed network_max_size");
    }
    if (c.n_parents > 0 && c.n_children > 0) {
        auto mm = validate_matchmaker(c.matchmaker, c.population_size(), c.n_parents, c.population_size(),
                                      c.n_parents);
        problems.insert(problems.end(), mm.begin(), mm.end());
    }
    return problems;
}

ConfigValues to_values(const ExperimentConfig& c) {
    ConfigValues v;
    v["domain"] = std::string(to_string(c.domain));
    v["matchmaker"] = std::string(to_string(c.matchmaker.kind));
    v["n_parents"] = std::to_string(c.n_parents);
    v["n_children"] = std::to_string(c.n_children);
    v["cohort_size"] = std::to_string(c.matchmaker.cohort_size);
    std::ostringstream p_all;
    p_all << c.matchmaker.p_all;
    v["p_all"] = p_all.str();
    v["substitution_children"] = std::to_string(c.matchmaker.substitution_children);
    v["k_nearest"] = std::to_string(c.k_nearest);
    v["horizon"] = std::to_string(c.horizon);
    v["probe_count"] = std::to_string(c.probe_count);
    v["probe_source"] =
        c.probe_source == ProbeSource::UnplannedChildren ? "unplanned-children" : "evaluated-children";
    v["eval_budget"] = std::to_string(c.eval_budget);
    v["seed"] = std::to_string(c.seed);
    v["trials"] = std::to_string(c.trial_count);
    v["out"] = c.output_path;
    v["threads"] = std::to_string(c.threads);
    v["bonus_in_lexicase"] = c.bonus_in_lexicase ? "true" : "false";
    v["network_min_size"] = std::to_string(c.network_min_size);
    v["network_max_size"] = std::to_string(c.network_max_size);
    v["export_phylogeny"] = c.export_phylogeny ? "true" : "false";
    return v;
}

}  // namespace coevo
