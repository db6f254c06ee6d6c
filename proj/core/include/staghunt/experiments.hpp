#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace staghunt {

// Experiment families reproducing the figure data at desk scale.
enum class ExperimentKind {
    MonotonicityBetaK,   // mu(ones | beta) per K-regular graph over a beta grid
    BetaMin,             // exact beta_min vs the closed-form bound, per K
    EdgeAugmentation,    // mu(a*) while adding random successor edges
    RegularVsIrregular,  // regular graph vs random equal-edge graphs
    CltHistogram,        // normalized potential histogram per graph size
    PoiScatter,          // exact PoI against N * Var(d)
    VerifySuite,         // invariant battery with pass/fail counts
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);  // throws on unknown

// Inclusive linspace with recorded endpoints.
struct BetaGrid {
    double lo = 0.0;
    double hi = 3.0;
    int points = 61;

    std::vector<double> values() const;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::VerifySuite;
    int n = 14;
    double theta = 0.3;
    double delta = 0.1;
    double beta = 0.5;                        // single-beta experiments
    BetaGrid beta_grid;                       // monotonicity-beta-k
    std::vector<double> beta_list = {0.1, 0.5};  // regular-vs-irregular
    std::vector<int> k_list = {3, 5, 7, 9, 11, 13};
    std::vector<int> n_list;                  // clt-histogram / poi-scatter sizes
    int edges = 0;                            // 0: derived (3n for the design experiments)
    int random_graphs = 100;
    int added_edges = 20;
    long long samples = 100000;
    std::uint64_t seed = 1;
    std::string graph_file;                   // optional edge-list input
    std::string output;                       // CSV path; empty: derived default
};

// Fills kind-dependent defaults (n_list, edges) and checks every numeric
// field against the preconditions of the operations it feeds, including
// enumeration caps, before any computation starts. Throws
// std::invalid_argument with a one-line diagnostic.
void validate_config(ExperimentConfig& config);

struct SeriesRow {
    double x = 0.0;
    double y = 0.0;
    std::string series;
};

struct SeriesOutput {
    std::string metadata_json;  // config echo, seeds, version, timestamp, extras
    std::vector<SeriesRow> rows;
};

// Runs the experiment (validating first) and returns the series data.
// The verify-suite prints one line per check to stdout.
SeriesOutput run_experiment(const ExperimentConfig& config);

// Writes the CSV ("x,y,series" header) and the JSON sidecar next to it.
// CSV bytes depend only on the rows, so equal configs and seeds reproduce
// identical files.
void write_series(const SeriesOutput& out, const std::string& csv_path);

// Output path used when none is configured: "<experiment>.csv" inside
// $STAGHUNT_OUT_DIR when set, the working directory otherwise.
std::string default_output_path(const ExperimentConfig& config);

// Thrown by parse_config when --help is requested.
struct HelpRequested {
    std::string text;
};

// Parses argv-style flags, optionally merged with "--config <file>"
// (flags take precedence; unknown keys are rejected). Throws
// std::invalid_argument on malformed input.
ExperimentConfig parse_config(const std::vector<std::string>& args);

}  // namespace staghunt
