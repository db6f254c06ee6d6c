#include "staghunt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "staghunt/design.hpp"
#include "staghunt/game.hpp"
#include "staghunt/gibbs.hpp"
#include "staghunt/graph.hpp"
#include "staghunt/lll.hpp"
#include "staghunt/version.hpp"

namespace staghunt {

namespace {

using nlohmann::json;

const std::vector<std::pair<const char*, ExperimentKind>> kExperimentNames = {
    {"monotonicity-beta-k", ExperimentKind::MonotonicityBetaK},
    {"beta-min", ExperimentKind::BetaMin},
    {"edge-augmentation", ExperimentKind::EdgeAugmentation},
    {"regular-vs-irregular", ExperimentKind::RegularVsIrregular},
    {"clt-histogram", ExperimentKind::CltHistogram},
    {"poi-scatter", ExperimentKind::PoiScatter},
    {"verify-suite", ExperimentKind::VerifySuite},
};

}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto& [name, value] : kExperimentNames)
        if (value == kind) return name;
    return "unknown";
}

ExperimentKind experiment_from_string(const std::string& name) {
    for (const auto& [candidate, value] : kExperimentNames)
        if (name == candidate) return value;
    throw std::invalid_argument("unknown experiment name: " + name);
}

std::vector<double> BetaGrid::values() const {
    std::vector<double> grid;
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    grid.reserve(points);
    for (int i = 0; i < points; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
    return grid;
}

void validate_config(ExperimentConfig& config) {
    if (config.n < 2) throw std::invalid_argument("n must be at least 2");
    if (config.theta < -10.0 || config.theta > 10.0)
        throw std::invalid_argument("theta is outside the sane range [-10, 10]");
    if (config.beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
    if (config.beta_grid.points < 1 || config.beta_grid.lo > config.beta_grid.hi ||
        config.beta_grid.lo < 0.0)
        throw std::invalid_argument("beta grid must satisfy 0 <= lo <= hi, points >= 1");
    for (double b : config.beta_list)
        if (b < 0.0) throw std::invalid_argument("beta list entries must be nonnegative");
    if (config.samples < 1000) throw std::invalid_argument("samples must be at least 1000");
    if (config.random_graphs < 1)
        throw std::invalid_argument("random graph count must be positive");
    if (config.added_edges < 1) throw std::invalid_argument("added edge count must be positive");

    const long long max_edges = static_cast<long long>(config.n) * (config.n - 1) / 2;
    switch (config.kind) {
        case ExperimentKind::MonotonicityBetaK:
        case ExperimentKind::BetaMin:
            if (config.n > kGibbsStoredCap)
                throw std::invalid_argument("n exceeds the exact enumeration cap of 26");
            if (config.k_list.empty()) throw std::invalid_argument("k list must be nonempty");
            for (int k : config.k_list) {
                if (k < 2 || k > config.n - 1)
                    throw std::invalid_argument("every k must lie in [2, n-1]");
                if ((static_cast<long long>(config.n) * k) % 2 != 0)
                    throw std::invalid_argument("every k must satisfy even n*k (k=" +
                                                std::to_string(k) + ")");
            }
            if (config.kind == ExperimentKind::BetaMin) {
                if (config.theta == 0.5)
                    throw std::invalid_argument("beta-min is undefined at theta = 1/2");
                if (!(config.delta > 0.0 && config.delta < 1.0))
                    throw std::invalid_argument("delta must lie in (0, 1)");
            }
            break;
        case ExperimentKind::EdgeAugmentation:
            if (config.n > kGibbsStoredCap)
                throw std::invalid_argument("n exceeds the exact enumeration cap of 26");
            if (config.n - 1 + config.added_edges > max_edges)
                throw std::invalid_argument("added edge count exceeds the complete graph");
            break;
        case ExperimentKind::RegularVsIrregular:
        case ExperimentKind::PoiScatter: {
            std::vector<int> sizes = config.kind == ExperimentKind::PoiScatter
                                         ? config.n_list
                                         : std::vector<int>{config.n};
            if (config.kind == ExperimentKind::PoiScatter && sizes.empty())
                sizes = config.n_list = {10, 12, 14};
            for (int n : sizes) {
                if (n > kGibbsStoredCap)
                    throw std::invalid_argument("n exceeds the exact enumeration cap of 26");
                const int m = config.edges > 0 ? config.edges : 3 * n;
                if (m < n - 1 || m > static_cast<long long>(n) * (n - 1) / 2)
                    throw std::invalid_argument("edge count is outside [n-1, n(n-1)/2]");
                const int degree_sum = 2 * m;
                if (degree_sum % n != 0)
                    throw std::invalid_argument(
                        "edge count must give an integer regular degree 2m/n");
                const int k = degree_sum / n;
                if (k < 2 || k > n - 1)
                    throw std::invalid_argument("derived regular degree is outside [2, n-1]");
            }
            break;
        }
        case ExperimentKind::CltHistogram:
            if (config.n_list.empty()) config.n_list = {64, 256, 1024};
            for (int n : config.n_list)
                if (n < 2) throw std::invalid_argument("clt sizes must be at least 2");
            break;
        case ExperimentKind::VerifySuite:
            break;
    }
}

namespace {

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["experiment"] = to_string(c.kind);
    j["n"] = c.n;
    j["theta"] = c.theta;
    j["delta"] = c.delta;
    j["beta"] = c.beta;
    j["beta_grid"] = {{"lo", c.beta_grid.lo}, {"hi", c.beta_grid.hi}, {"points", c.beta_grid.points}};
    j["beta_list"] = c.beta_list;
    j["k_list"] = c.k_list;
    j["n_list"] = c.n_list;
    j["edges"] = c.edges;
    j["random_graphs"] = c.random_graphs;
    j["added_edges"] = c.added_edges;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["graph_file"] = c.graph_file;
    j["output"] = c.output;
    return j;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct ExperimentResult {
    std::vector<SeriesRow> rows;
    json extra;  // experiment-specific metadata
};

ExperimentResult run_monotonicity(const ExperimentConfig& c) {
    ExperimentResult r;
    const std::vector<double> grid = c.beta_grid.values();
    for (int k : c.k_list) {
        const Graph g = build_k_regular(c.n, k);
        const std::string label = "K=" + std::to_string(k);
        for (double beta : grid)
            r.rows.push_back({beta, stationary_prob_star(g, c.theta, beta), label});
    }
    return r;
}

ExperimentResult run_beta_min(const ExperimentConfig& c) {
    ExperimentResult r;
    for (int k : c.k_list) {
        const Graph g = build_k_regular(c.n, k);
        const BetaMinResult exact = beta_min(g, c.theta, c.delta);
        r.rows.push_back({static_cast<double>(k), exact.beta_min, "exact"});
        r.rows.push_back(
            {static_cast<double>(k), beta_min_upper_bound(k, c.n, c.theta, c.delta), "bound"});
    }
    return r;
}

ExperimentResult run_edge_augmentation(const ExperimentConfig& c) {
    ExperimentResult r;
    Rng rng(c.seed);
    Graph g = c.graph_file.empty() ? random_connected_graph(c.n, c.n - 1, rng)
                                   : read_edge_list_file(c.graph_file);
    if (!g.is_connected())
        throw std::invalid_argument("edge-augmentation requires a connected starting graph");
    // Re-check the caps against the loaded graph before any enumeration.
    if (g.vertex_count() > kGibbsStoredCap)
        throw std::invalid_argument("graph file exceeds the exact enumeration cap of 26");
    const long long capacity =
        static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2;
    if (static_cast<long long>(g.edge_count()) + c.added_edges > capacity)
        throw std::invalid_argument("added edge count exceeds the complete graph");
    auto record = [&](const Graph& graph) {
        r.rows.push_back({static_cast<double>(graph.edge_count()),
                          stationary_prob_star(graph, c.theta, c.beta), "augmentation"});
    };
    record(g);
    for (int step = 0; step < c.added_edges; ++step) {
        int u = 0, v = 0;
        do {
            u = rng.next_int(0, g.vertex_count() - 1);
            v = rng.next_int(0, g.vertex_count() - 1);
        } while (u == v || g.has_edge(u, v));
        g = add_edge_successor(g, u, v);
        record(g);
    }
    return r;
}

ExperimentResult run_regular_vs_irregular(const ExperimentConfig& c) {
    ExperimentResult r;
    const int m = c.edges > 0 ? c.edges : 3 * c.n;
    const int k = 2 * m / c.n;
    const Graph regular = build_k_regular(c.n, k);
    Rng rng(c.seed);

    auto degree_var = [](const Graph& g) {
        long long sum_sq = 0;
        for (int d : g.degrees()) sum_sq += static_cast<long long>(d) * d;
        const double mean = 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
        return static_cast<double>(sum_sq) / g.vertex_count() - mean * mean;
    };

    for (double beta : c.beta_list) {
        char label[64];
        std::snprintf(label, sizeof label, "regular beta=%g", beta);
        r.rows.push_back({0.0, stationary_prob_star(regular, c.theta, beta), label});
    }
    for (int i = 0; i < c.random_graphs; ++i) {
        const Graph g = random_connected_graph(c.n, m, rng);
        for (double beta : c.beta_list) {
            char label[64];
            std::snprintf(label, sizeof label, "random beta=%g", beta);
            r.rows.push_back({degree_var(g), stationary_prob_star(g, c.theta, beta), label});
        }
    }
    return r;
}

ExperimentResult run_clt_histogram(const ExperimentConfig& c) {
    ExperimentResult r;
    constexpr int kBins = 81;
    constexpr double kLo = -4.0, kHi = 4.0;
    Rng root(c.seed);
    r.extra["ks"] = json::object();
    for (std::size_t idx = 0; idx < c.n_list.size(); ++idx) {
        const int n = c.n_list[idx];
        Rng rng = root.split(idx);
        const Graph g = erdos_renyi(n, 10.0 / n, rng);
        std::vector<double> z;
        const CltReport report = clt_sample(g, c.theta, rng, c.samples, &z);

        std::vector<long long> bins(kBins, 0);
        for (double value : z) {
            if (value < kLo || value >= kHi) continue;
            ++bins[static_cast<int>((value - kLo) / (kHi - kLo) * kBins)];
        }
        const double width = (kHi - kLo) / kBins;
        const std::string label = "N=" + std::to_string(n);
        for (int b = 0; b < kBins; ++b) {
            const double center = kLo + (b + 0.5) * width;
            const double density =
                static_cast<double>(bins[b]) / (static_cast<double>(c.samples) * width);
            r.rows.push_back({center, density, label});
        }
        r.extra["ks"][label] = {{"ks_statistic", report.ks_statistic},
                                {"max_degree_ratio", report.max_degree_ratio},
                                {"degree_sum_ratio", report.degree_sum_ratio}};
    }
    return r;
}

ExperimentResult run_poi_scatter(const ExperimentConfig& c) {
    ExperimentResult r;
    Rng root(c.seed);
    r.extra["fit"] = json::object();
    const double cc = spin_coupling(c.theta);
    for (std::size_t idx = 0; idx < c.n_list.size(); ++idx) {
        const int n = c.n_list[idx];
        const int m = c.edges > 0 ? c.edges : 3 * n;
        const Graph regular = build_k_regular(n, 2 * m / n);
        Rng rng = root.split(idx);
        const std::string label = "N=" + std::to_string(n);

        std::vector<double> xs, ys;
        for (int i = 0; i < c.random_graphs; ++i) {
            Graph g = random_connected_graph(n, m, rng);
            while (g.regular_degree() != -1) g = random_connected_graph(n, m, rng);
            const PoIResult poi = price_of_irregularity(regular, g, c.theta, c.beta);
            const double x = n * poi.degree_variance;
            xs.push_back(x);
            ys.push_back(poi.exact_poi);
            r.rows.push_back({x, poi.exact_poi, label});
        }

        // Least-squares fit of PoI on N * Var(d); theory slope beta^2 c^2 / 2.
        const double count = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / count;
        r.extra["fit"][label] = {{"slope", slope},
                                 {"intercept", intercept},
                                 {"theory_slope", 0.5 * c.beta * c.beta * cc * cc}};
    }
    return r;
}

// One named check of the verify-suite battery.
struct VerifyCheck {
    std::string name;
    bool passed;
};

std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed);

ExperimentResult run_verify_suite(const ExperimentConfig& c) {
    ExperimentResult r;
    const std::vector<VerifyCheck> checks = run_verify_checks(c.seed);
    int passed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& check = checks[i];
        passed += check.passed ? 1 : 0;
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << '\n';
        r.rows.push_back({static_cast<double>(i), check.passed ? 1.0 : 0.0, check.name});
    }
    std::cout << passed << "/" << checks.size() << " checks passed" << std::endl;
    r.extra["passed"] = passed;
    r.extra["failed"] = static_cast<int>(checks.size()) - passed;
    if (passed != static_cast<int>(checks.size()))
        throw std::runtime_error("verify-suite: some invariant checks failed");
    return r;
}

}  // namespace

SeriesOutput run_experiment(const ExperimentConfig& config) {
    ExperimentConfig c = config;
    validate_config(c);

    ExperimentResult result;
    switch (c.kind) {
        case ExperimentKind::MonotonicityBetaK: result = run_monotonicity(c); break;
        case ExperimentKind::BetaMin: result = run_beta_min(c); break;
        case ExperimentKind::EdgeAugmentation: result = run_edge_augmentation(c); break;
        case ExperimentKind::RegularVsIrregular: result = run_regular_vs_irregular(c); break;
        case ExperimentKind::CltHistogram: result = run_clt_histogram(c); break;
        case ExperimentKind::PoiScatter: result = run_poi_scatter(c); break;
        case ExperimentKind::VerifySuite: result = run_verify_suite(c); break;
    }

    json meta;
    meta["config"] = config_to_json(c);
    meta["seed"] = c.seed;
    meta["version"] = kVersion;
    meta["git_describe"] = kGitDescribe;
    meta["timestamp"] = timestamp_utc();
    meta["rows"] = result.rows.size();
    if (!result.extra.is_null()) meta["results"] = result.extra;

    SeriesOutput out;
    out.metadata_json = meta.dump(2);
    out.rows = std::move(result.rows);
    return out;
}

void write_series(const SeriesOutput& out, const std::string& csv_path) {
    namespace fs = std::filesystem;
    const fs::path csv(csv_path);
    if (csv.has_parent_path()) fs::create_directories(csv.parent_path());

    std::ofstream file(csv, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + csv_path);
    file << "x,y,series\n";
    char buf[64];
    for (const auto& row : out.rows) {
        std::snprintf(buf, sizeof buf, "%.17g", row.x);
        file << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", row.y);
        file << buf << ',' << row.series << '\n';
    }
    file.close();

    fs::path sidecar(csv);
    sidecar.replace_extension(".json");
    std::ofstream meta(sidecar, std::ios::binary);
    if (!meta) throw std::runtime_error("cannot open sidecar file: " + sidecar.string());
    meta << out.metadata_json << '\n';
}

std::string default_output_path(const ExperimentConfig& config) {
    const std::string name = to_string(config.kind) + ".csv";
    if (const char* dir = std::getenv("STAGHUNT_OUT_DIR"); dir && *dir)
        return (std::filesystem::path(dir) / name).string();
    return name;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    ExperimentConfig config;
    std::string experiment_name = to_string(config.kind);

    CLI::App app{"stag hunt coordination experiments"};
    app.set_config("--config", "", "Read options from an INI/TOML file (flags win)");
    app.allow_config_extras(CLI::config_extras_mode::error);  // unknown keys rejected
    app.add_option("--experiment", experiment_name, "Experiment name")
        ->check(CLI::IsMember({"monotonicity-beta-k", "beta-min", "edge-augmentation",
                               "regular-vs-irregular", "clt-histogram", "poi-scatter",
                               "verify-suite"}));
    app.add_option("--n", config.n, "Agent count");
    app.add_option("--theta", config.theta, "Task difficulty");
    app.add_option("--delta", config.delta, "Miscoordination tolerance");
    app.add_option("--beta", config.beta, "Rationality for single-beta experiments");
    app.add_option("--beta-lo", config.beta_grid.lo, "Beta grid lower endpoint");
    app.add_option("--beta-hi", config.beta_grid.hi, "Beta grid upper endpoint");
    app.add_option("--beta-points", config.beta_grid.points, "Beta grid size");
    app.add_option("--beta-list", config.beta_list, "Beta values for regular-vs-irregular");
    app.add_option("--k-list", config.k_list, "Regular degrees");
    app.add_option("--n-list", config.n_list, "Graph sizes for clt-histogram/poi-scatter");
    app.add_option("--edges", config.edges, "Edge budget (0 = derived)");
    app.add_option("--random-graphs", config.random_graphs, "Random graph count");
    app.add_option("--added-edges", config.added_edges, "Edges added by edge-augmentation");
    app.add_option("--samples", config.samples, "Spin sample count");
    app.add_option("--seed", config.seed, "Root seed (all streams derive from it)");
    app.add_option("--graph-file", config.graph_file, "Edge-list file ('n m' header)");
    app.add_option("--output", config.output, "CSV output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    config.kind = experiment_from_string(experiment_name);
    validate_config(config);
    return config;
}

// ---------------------------------------------------------------------------
// verify-suite battery

namespace {

Graph random_connected(Rng& rng, int n_lo, int n_hi) {
    const int n = rng.next_int(n_lo, n_hi);
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    const int m = static_cast<int>(rng.next_below(max_edges - (n - 1) + 1)) + (n - 1);
    return random_connected_graph(n, m, rng);
}

std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed) {
    std::vector<VerifyCheck> checks;
    auto add = [&](const std::string& name, bool ok) { checks.push_back({name, ok}); };
    Rng rng(seed);

    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            const Graph g = random_connected(rng, 3, 8);
            const double theta = -1.0 + 3.0 * rng.next_double();
            ok = verify_exact_potential(g, theta, PotentialForm::Reduced) &&
                 verify_exact_potential(g, theta, PotentialForm::Full);
        }
        add("exact-potential-identity", ok);
    }
    {
        const Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        const bool rejected =
            !verify_exact_potential(path, 0.3,
                                    [](const Graph& g, const ActionProfile& a, double) {
                                        const auto t = reduced_potential_terms(g, a);
                                        return static_cast<double>(t.inside_edges);
                                    });
        add("corrupted-potential-rejected", rejected);
    }
    {
        const Graph g = random_connected(rng, 6, 9);
        const GibbsDistribution mu = exact_gibbs(g, 0.3, 1.25);
        double total = 0.0;
        for (double p : mu.probabilities()) total += p;
        add("gibbs-normalization", std::abs(total - 1.0) < 1e-12);
    }
    {
        const Graph g = random_connected(rng, 5, 8);
        const GibbsDistribution a = exact_gibbs(g, 0.3, 1.0, PotentialForm::Reduced);
        const GibbsDistribution b = exact_gibbs(g, 0.3, 1.0, PotentialForm::Full);
        double worst = 0.0;
        for (std::uint64_t m = 0; m < (1ull << g.vertex_count()); ++m)
            worst = std::max(worst, std::abs(a.probability(m) - b.probability(m)));
        add("potential-shift-invariance", worst < 1e-12);
    }
    {
        const Graph g = random_connected(rng, 4, 7);
        const int n = g.vertex_count();
        const GibbsDistribution mu = exact_gibbs(g, 0.35, 0.8);
        double worst = 0.0;
        double log_z_spin = log_partition_ising(g, 0.35, 0.8);
        for (std::uint64_t m = 0; m < (1ull << n); ++m) {
            const SpinProfile s = SpinProfile::from_actions(ActionProfile::from_mask(m, n));
            const double p_spin = std::exp(0.8 * ising_potential(g, s, 0.35) - log_z_spin);
            worst = std::max(worst, std::abs(mu.probability(m) - p_spin));
        }
        add("spin-parameterization-equivalence", worst < 1e-12);
    }
    {
        const Graph g = random_connected(rng, 5, 7);
        const int n = g.vertex_count();
        const std::uint64_t size = 1ull << n;
        const std::vector<double> mu = exact_gibbs(g, 0.3, 1.5).probabilities();
        const std::vector<double> kernel = transition_matrix(g, 0.3, 1.5);
        double stationarity = 0.0;
        for (std::uint64_t to = 0; to < size; ++to) {
            double acc = 0.0;
            for (std::uint64_t from = 0; from < size; ++from)
                acc += mu[from] * kernel[from * size + to];
            stationarity += std::abs(acc - mu[to]);
        }
        double balance = 0.0;
        for (std::uint64_t m = 0; m < size; ++m)
            for (int i = 0; i < n; ++i) {
                const std::uint64_t f = m ^ (1ull << i);
                balance = std::max(balance, std::abs(mu[m] * kernel[m * size + f] -
                                                     mu[f] * kernel[f * size + m]));
            }
        add("gibbs-stationarity", stationarity < 1e-10);
        add("detailed-balance", balance < 1e-10);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const Graph g = random_connected(rng, 4, 10);
            for (double beta : {0.0, 0.7, 2.0}) {
                const double exact = stationary_prob_star(g, 0.3, beta);
                if (spectral_lower_bound(g, 0.3, beta) > exact + 1e-12) ok = false;
            }
        }
        add("spectral-bound-dominance", ok);
    }
    {
        bool ok = true;
        for (int k : {3, 6}) {
            const Graph g = build_k_regular(14, k);
            const BetaMinResult exact = beta_min(g, 0.3, 0.1);
            if (exact.beta_min > beta_min_upper_bound(k, 14, 0.3, 0.1)) ok = false;
        }
        add("beta-min-below-bound", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 4 && ok; ++trial) {
            const Graph g = random_connected(rng, 4, 9);
            const double theta = rng.next_double();
            const PotentialVariance v = potential_variance(g, theta);
            // Exact population variance from integer moment sums.
            long long sq = 0, sl = 0, sql = 0;
            const int n = g.vertex_count();
            for (std::uint64_t m = 0; m < (1ull << n); ++m) {
                const SpinProfile s = SpinProfile::from_actions(ActionProfile::from_mask(m, n));
                const PotentialTerms t = ising_potential_terms(g, s);
                sq += t.inside_edges * t.inside_edges;
                sl += t.degree_mass * t.degree_mass;
                sql += t.inside_edges * t.degree_mass;
            }
            const double count = std::pow(2.0, n);
            const double c = 0.25 - 0.5 * theta;
            const double variance = (0.0625 * sq + c * c * sl + 0.5 * c * sql) / count;
            if (std::abs(variance - v.sigma2) > 1e-9 * std::max(1.0, v.sigma2)) ok = false;
        }
        add("sigma2-identity", ok);
    }
    {
        const Graph cycle = build_k_regular(8, 2);
        Rng sub = rng.split(17);
        const Graph lifted = augment_regular(cycle, sub);
        const bool ok = lifted.regular_degree() == 3 &&
                        stationary_prob_star(lifted, 0.3, 1.0) >
                            stationary_prob_star(cycle, 0.3, 1.0);
        add("augmentation-monotonicity", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const Graph g = random_connected(rng, 4, 9);
            int u = 0, v = 0;
            bool found = false;
            for (int a = 0; a < g.vertex_count() && !found; ++a)
                for (int b = a + 1; b < g.vertex_count() && !found; ++b)
                    if (!g.has_edge(a, b)) {
                        u = a;
                        v = b;
                        found = true;
                    }
            if (!found) continue;  // complete graph drawn
            const Graph succ = add_edge_successor(g, u, v);
            if (stationary_prob_star(succ, 0.3, 1.0) <=
                stationary_prob_star(g, 0.3, 1.0))
                ok = false;
        }
        add("edge-successor-monotonicity", ok);
    }
    {
        const DegreeSequence best = optimal_degree_sequence(5, 6);
        long long best_sq = best.sum_of_squares();
        bool ok = best.sum() == 12;
        // Exhaustive integer compositions of 12 into 5 parts within [0, 4].
        for (int a = 0; a <= 4 && ok; ++a)
            for (int b = 0; b <= 4 && ok; ++b)
                for (int c = 0; c <= 4 && ok; ++c)
                    for (int d = 0; d <= 4 && ok; ++d) {
                        const int e = 12 - a - b - c - d;
                        if (e < 0 || e > 4) continue;
                        const long long sq = static_cast<long long>(a) * a + b * b + c * c +
                                             d * d + static_cast<long long>(e) * e;
                        if (sq < best_sq) ok = false;
                    }
        add("majorization-optimality", ok);
    }
    {
        Rng sub = rng.split(23);
        const Graph g = realize_degree_sequence(optimal_degree_sequence(14, 42), sub);
        add("degree-sequence-realization",
            g.is_connected() && g.regular_degree() == 6 && g.edge_count() == 42);
    }
    return checks;
}

}  // namespace

}  // namespace staghunt
